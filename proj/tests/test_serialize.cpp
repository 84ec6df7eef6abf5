#include <doctest.h>

#include <fstream>
#include <sstream>

#include "enumeration.hpp"
#include "fixtures.hpp"
#include "loops.hpp"
#include "serialize.hpp"

using namespace smg;
using namespace fixtures;

TEST_CASE("standard graph round trips over whole corpora") {
    for (auto c : {cfg(6, {0, 3}), cfg(6, {0, 2, 4}), cfg(5, {0, 2})}) {
        for (auto& g : enum_standard_graphs(c, 1)) {
            StandardGraph back = parse_standard_graph(serialize(g));
            CHECK(back.equals(g));
        }
    }
}

TEST_CASE("parse errors carry line diagnostics") {
    CHECK_THROWS_WITH_AS(parse_standard_graph("nonsense"), doctest::Contains("sgraph"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_standard_graph("sgraph 1\nn 6\nsub 0 3\nvertex 0 : zork\n"),
                         doctest::Contains("line 4"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_standard_graph("sgraph 1\nn 6\nsub 0 3\nvertex 0 : edge(1,1)\n"
                             "vertex 1 : edge(0,2)\n"),
        doctest::Contains("mismatched"), ParseError);
}

TEST_CASE("layered validation: a parseable file may still be invalid") {
    // adjacent subdominant sectors parse fine and fail validate()
    auto g = parse_standard_graph(
        "sgraph 1\nn 6\nsub 0 1\n"
        "vertex 0 : ray0 ray1 ray2 ray3 ray4 ray5\n");
    auto v = g.validate();
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("adjacent subdominant") != std::string::npos);
}

TEST_CASE("golden file: the worked example parses to the expected inventory") {
    std::ifstream is(std::string(TEST_DATA_DIR) + "/fig4.sgraph");
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    auto g = parse_standard_graph(os.str());
    REQUIRE(g.validate().empty());
    CHECK(g.equals(fig4()));
    CHECK(g.find_structure(1)->kind == StructureKind::I);
    CHECK(g.find_structure(2)->kind == StructureKind::V);
    CHECK(g.find_structure(4)->kind == StructureKind::I);
    CHECK(g.find_structure(5)->kind == StructureKind::Y);
}

TEST_CASE("cell graph round trip") {
    auto g = two_junction_63(2);
    CellGraph cg = to_cell_graph(g, 2);
    CellGraph back = parse_cell_graph(serialize(cg));
    CHECK(back == cg);
    // flags survive the round trip
    bool any_flag = false;
    for (int v = 0; v < back.vertex_count(); ++v) any_flag |= back.has_unknown(v);
    CHECK(any_flag);
}

TEST_CASE("chord diagram round trip") {
    for (auto& d : enum_chord_diagrams(6)) {
        ChordDiagram back = parse_chord_diagram(serialize(d));
        CHECK(back == d);
    }
}

TEST_CASE("braid word syntax") {
    BraidWord w{{1, +2}, {4, -2}, {0, +1}, {5, -1}};
    CHECK(braid_word_str(w) == "1^+2,4^-2,0^+1,5^-1");
    CHECK(parse_braid_word("1^+2,4^-2,0^+1,5^-1") == w);
    CHECK(parse_braid_word("") == BraidWord{});
    CHECK(parse_braid_word(" 1^+2 , 4^-2 ") == BraidWord{{1, +2}, {4, -2}});
    CHECK_THROWS_AS(parse_braid_word("1^+3"), ParseError);
    CHECK_THROWS_AS(parse_braid_word("nope"), ParseError);
}

TEST_CASE("loop system round trip") {
    auto sys = word_action(initial_system(cfg(6, {})), {{3, -1}, {2, +1}, {3, +1}});
    LoopSystem back = parse_loop_system(serialize(sys));
    CHECK(back == sys);
}

TEST_CASE("corpus round trip") {
    auto corpus = enum_standard_graphs(cfg(6, {0, 3}), 1);
    auto back = parse_corpus(serialize_corpus(corpus));
    REQUIRE(back.size() == corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) CHECK(back[i].equals(corpus[i]));
}

TEST_CASE("dot export") {
    auto star = StandardGraph::star(cfg(6, {0, 3}));
    std::string dot = export_dot(star);
    // one junction node plus six ray pseudo-nodes
    CHECK(dot.find("v0 [shape=circle") != std::string::npos);
    for (int r = 0; r < 6; ++r)
        CHECK(dot.find("ray" + std::to_string(r) + " [shape=none") != std::string::npos);

    // the worked example styles the three structure kinds distinctly
    std::string fig = export_dot(fig4());
    CHECK(fig.find("dotted") != std::string::npos);
    CHECK(fig.find("dashed") != std::string::npos);
    CHECK(fig.find("gray30") != std::string::npos); // the dot-dash stand-in

    // a double edge renders as two directed cell edges
    std::string cell = export_dot(to_cell_graph(star, 1));
    CHECK(cell.find("label=\"1\"") != std::string::npos);
    CHECK(cell.find("label=\"2\"") != std::string::npos);
}
