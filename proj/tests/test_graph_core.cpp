#include <doctest.h>

#include <set>

#include "actions.hpp"
#include "cell_graph.hpp"
#include "fixtures.hpp"
#include "standard_graph.hpp"

using namespace smg;
using namespace fixtures;

TEST_CASE("star graphs validate") {
    auto g = StandardGraph::star(cfg(6, {0, 3}));
    CHECK(g.validate().empty());
    CHECK(StandardGraph::star(cfg(6, {0, 2, 4})).validate().empty());
    CHECK(StandardGraph::star(cfg(5, {0, 2})).validate().empty());
}

TEST_CASE("adjacent subdominant sectors are reported as a violation") {
    auto g = StandardGraph::star(SectorConfig::unchecked(6, {0, 1}));
    auto v = g.validate();
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("adjacent subdominant") != std::string::npos);
}

TEST_CASE("misordered rays are reported as a violation") {
    // rays 4 and 5 swapped in the embedding of the second junction
    auto g = from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 3\n"
        "vertex 0 : ray1 ray2 ray3 edge(1,1)\n"
        "vertex 1 : ray5 ray4 ray0 edge(0,1)\n");
    auto v = g.validate();
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("cyclic ray order") != std::string::npos);
}

TEST_CASE("to_cell_graph materializes the window and applies the side rule") {
    auto g = StandardGraph::star(cfg(6, {0, 3}));
    CellGraph cg = to_cell_graph(g, 1);
    CHECK(cg.vertex_count() == 7); // center + one per ray
    // double edges only on the rays separating dominant pairs (1,2) and (4,5)
    int doubles = 0;
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : cg.edges()) {
        auto key = std::minmax(e.from, e.to);
        if (!pairs.insert({key.first, key.second}).second) ++doubles;
    }
    CHECK(doubles == 2);
    CHECK(cg.validate().empty());

    CellGraph alt = to_cell_graph(StandardGraph::star(cfg(6, {0, 2, 4})), 1);
    int alt_doubles = 0;
    std::set<std::pair<int, int>> alt_pairs;
    for (const auto& e : alt.edges()) {
        auto key = std::minmax(e.from, e.to);
        if (!alt_pairs.insert({key.first, key.second}).second) ++alt_doubles;
    }
    CHECK(alt_doubles == 0);

    CHECK_THROWS_AS(to_cell_graph(g, 0), std::invalid_argument);
}

TEST_CASE("bounded face counts") {
    CHECK(StandardGraph::star(cfg(6, {0, 2, 4})).bounded_face_count() == 0);
    CHECK(StandardGraph::star(cfg(6, {0, 3})).bounded_face_count() == 2);
    CHECK(y_chain_624(3).bounded_face_count() == 3);
}

TEST_CASE("bounded faces equal core double edges of any truncation") {
    for (auto g : {StandardGraph::star(cfg(6, {0, 3})), two_junction_63(2), y_chain_624(2)}) {
        int want = g.bounded_face_count();
        for (int w : {1, 2, 3}) {
            // count double edges with at least one endpoint in the core
            CellGraph cg = to_cell_graph(g, w);
            int core_vertices = 0;
            for (int v : g.alive_vertices()) (void)v, ++core_vertices;
            for (int e : g.alive_edges()) core_vertices += g.edge(e).len - 1;
            std::map<std::pair<int, int>, int> seen;
            for (const auto& e : cg.edges()) {
                auto key = std::minmax(e.from, e.to);
                seen[{key.first, key.second}]++;
            }
            int count = 0;
            for (auto& [key, c] : seen)
                if (c == 2 && (key.first < core_vertices || key.second < core_vertices))
                    ++count;
            CHECK(count == want);
        }
    }
}

TEST_CASE("structure inventory of the worked example") {
    auto g = fig4();
    REQUIRE(g.validate().empty());
    const int u = 0, v = 1, y = 2;

    auto s1 = g.find_structure(1);
    REQUIRE(s1.has_value());
    CHECK(s1->kind == StructureKind::I);
    CHECK(s1->junction == v);

    auto s2 = g.find_structure(2);
    REQUIRE(s2.has_value());
    CHECK(s2->kind == StructureKind::V);
    CHECK(s2->junction == v);

    auto s4 = g.find_structure(4);
    REQUIRE(s4.has_value());
    CHECK(s4->kind == StructureKind::I);
    CHECK(s4->junction == u);

    auto s5 = g.find_structure(5);
    REQUIRE(s5.has_value());
    CHECK(s5->kind == StructureKind::Y);
    CHECK(s5->junction == u);
    CHECK(s5->y_junction == y);

    CHECK(g.junction_list() == std::vector<int>{0, 1, 2});
    CHECK_FALSE(g.is_ivy()); // u and v are both non-Y junctions
}

TEST_CASE("star structures and ivy") {
    auto g = StandardGraph::star(cfg(6, {0, 3}));
    auto s1 = g.find_structure(1);
    REQUIRE(s1.has_value());
    CHECK(s1->kind == StructureKind::I);
    CHECK(s1->junction == 0);
    auto s2 = g.find_structure(2);
    REQUIRE(s2.has_value());
    CHECK(s2->kind == StructureKind::V);
    CHECK(g.junction_list().size() == 1);
    CHECK(g.is_ivy());
}

TEST_CASE("no structure when the faces j and j_+ never meet") {
    auto g = no_1_junction_624();
    REQUIRE(g.validate().empty());
    CHECK_FALSE(g.find_structure(1).has_value());
    CHECK(g.find_structure(3).has_value());
    CHECK(g.find_structure(5).has_value());
}

TEST_CASE("at most one structure per label on enumerated-style graphs") {
    for (auto& g : {fig4(), two_junction_63(), y_chain_624(2)})
        for (int j : g.config().dominant_indices())
            (void)g.find_structure(j); // uniqueness is structural: no throw
}

TEST_CASE("u_metric") {
    auto star = StandardGraph::star(cfg(6, {0, 3}));
    CHECK(star.u_metric(0) == 0);

    // degree 3 and degree 5 junctions at distance 2
    auto g = from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 3\n"
        "vertex 0 : edge(1,2) ray2 ray3\n"
        "vertex 1 : edge(0,2) ray4 ray5 ray0 ray1\n");
    REQUIRE(g.validate().empty());
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(1) == 5);
    CHECK(g.u_metric(0) == 6); // (5-2)*2
    CHECK(g.u_metric(1) == 2); // (3-2)*2
    CHECK_THROWS_AS(g.u_metric(99), std::invalid_argument);
}

TEST_CASE("u_metric is zero iff u0 is the unique junction") {
    auto star = StandardGraph::star(cfg(6, {0, 2, 4}));
    CHECK(star.u_metric(0) == 0);
    auto g = two_junction_63();
    CHECK(g.u_metric(0) > 0);
    CHECK(g.u_metric(1) > 0);
}

TEST_CASE("canonicalize is rotation-insensitive and distinguishes graphs") {
    auto a = from_text(
        "sgraph 1\nn 6\nsub 0 3\n"
        "vertex 0 : ray1 ray2 ray3 edge(1,1)\n"
        "vertex 1 : ray4 ray5 ray0 edge(0,1)\n");
    auto b = from_text(
        "sgraph 1\nn 6\nsub 0 3\n"
        "vertex 0 : edge(1,1) ray4 ray5 ray0\n" // rotated item lists, renumbered
        "vertex 1 : edge(0,1) ray1 ray2 ray3\n");
    CHECK(a.equals(b));
    CHECK(a.canonical() == b.canonical());

    auto c = two_junction_63(2); // one chain lengthened
    CHECK_FALSE(a.equals(c));
    CHECK(a.bounded_face_count() != StandardGraph::star(cfg(6, {0, 2, 4})).bounded_face_count());
}

TEST_CASE("replaying an action pair returns to the identical canonical string") {
    auto star = StandardGraph::star(cfg(6, {0, 3}));
    auto there_and_back = act_squared(act_squared(star, 1, +1), 1, -1);
    CHECK(star.canonical() == there_and_back.canonical());
}
