#include <doctest.h>

#include <functional>
#include <set>

#include "enumeration.hpp"
#include "fixtures.hpp"

using namespace smg;
using namespace fixtures;

namespace {

// Independent oracle: plane trees with `leaves` leaves where every internal
// node has at least two children, counted by explicit recursive enumeration.
// Their count is the small Schroeder number s(leaves - 1).
long long count_bracketings(int leaves);

long long count_block_sequences(int leaves) {
    // sequences of one or more bracketed blocks covering `leaves` symbols
    if (leaves == 0) return 1;
    long long total = 0;
    for (int first = 1; first <= leaves; ++first)
        total += count_bracketings(first) * count_block_sequences(leaves - first);
    return total;
}

long long count_bracketings(int leaves) {
    if (leaves == 1) return 1;
    long long total = 0;
    // first child takes `first` symbols, the rest form at least one more block
    for (int first = 1; first < leaves; ++first)
        total += count_bracketings(first) * count_block_sequences(leaves - first);
    return total;
}

} // namespace

TEST_CASE("schroeder numbers match the listed prefix") {
    CHECK(schroeder(0) == 1);
    CHECK(schroeder(1) == 1);
    CHECK(schroeder(2) == 3);
    CHECK(schroeder(3) == 11);
    CHECK(schroeder(4) == 45);
    CHECK(schroeder(5) == 197);
    CHECK_THROWS_AS(schroeder(-1), std::invalid_argument);
}

TEST_CASE("schroeder(6) agrees with the exhaustive bracketing oracle") {
    CHECK(schroeder(6) == count_bracketings(7));
    // and the smaller values line up as well
    for (int k = 0; k <= 5; ++k) CHECK(schroeder(k) == count_bracketings(k + 1));
}

TEST_CASE("chord diagram counts are small Schroeder numbers") {
    CHECK(enum_chord_diagrams(3).size() == 1); // only the empty diagram
    CHECK(enum_chord_diagrams(4).size() == 3);
    CHECK(enum_chord_diagrams(5).size() == 11);
    CHECK(enum_chord_diagrams(6).size() == 45);
    CHECK(enum_chord_diagrams(7).size() == 197);
    for (int m = 3; m <= 9; ++m)
        CHECK((long long)enum_chord_diagrams(m).size() == schroeder(m - 2));
}

TEST_CASE("diagrams are duplicate-free and well-formed") {
    auto all = enum_chord_diagrams(6);
    std::set<ChordDiagram> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
    for (auto& d : all)
        for (auto& [a, b] : d.chords) {
            CHECK(b - a >= 2);
            bool wraps_adjacent = (a == 0 && b == 5);
            CHECK_FALSE(wraps_adjacent);
        }
}

TEST_CASE("junction trees respect the subdominant chord exclusion") {
    CHECK(enum_junction_trees(cfg(6, {0, 3})).size() == 36); // 45 - 9
    CHECK(enum_junction_trees(cfg(5, {})).size() == 11);
    // independent count for the alternating case: exclude chords {0,2},{2,4},{0,4}
    auto alt = enum_junction_trees(cfg(6, {0, 2, 4}));
    for (auto& d : alt)
        for (auto& [a, b] : d.chords) {
            bool both_subdominant = (a % 2 == 0 && b % 2 == 0);
            CHECK_FALSE(both_subdominant);
        }
    // inclusion-exclusion: 45 - 3*11 + 3*3 - 1 = 20
    CHECK(alt.size() == 20);
}

TEST_CASE("graphs from diagrams realize the dual tree") {
    auto c = cfg(6, {0, 3});
    ChordDiagram d{6, {{0, 3}}};
    auto g = graph_from_diagram(c, d, {2});
    REQUIRE(g.validate().empty());
    CHECK(g.junction_list().size() == 2);
    CHECK(g.max_chain_len() == 2);
    CHECK(junction_tree_of(g) == d);
}

TEST_CASE("enumerated corpora: size, validity, distinctness, duality") {
    auto c63 = cfg(6, {0, 3});
    auto corpus0 = enum_standard_graphs(c63, 0);
    CHECK(corpus0.size() == 1); // the star only
    CHECK(corpus0[0].equals(StandardGraph::star(c63)));

    auto corpus1 = enum_standard_graphs(c63, 1);
    CHECK(corpus1.size() == 36); // one graph per junction tree at unit lengths

    auto trees = enum_junction_trees(c63);
    std::set<ChordDiagram> tree_set(trees.begin(), trees.end());
    std::set<std::string> canon;
    for (auto& g : corpus1) {
        CHECK(g.validate().empty());
        CHECK(canon.insert(g.canonical()).second);
        CHECK(tree_set.count(junction_tree_of(g)) == 1);
    }

    // star present in every corpus
    bool star_found = false;
    for (auto& g : corpus1) star_found |= g.equals(StandardGraph::star(c63));
    CHECK(star_found);
}

TEST_CASE("alternating corpus at bound 0 is the single count-0 graph") {
    auto c = cfg(6, {0, 2, 4});
    auto corpus = enum_standard_graphs(c, 0);
    REQUIRE(corpus.size() == 1);
    CHECK(corpus[0].bounded_face_count() == 0);
}

TEST_CASE("golden corpus sizes for (6,{0,3})") {
    // frozen after the first exhaustive run; the bound-2 count follows
    // sum over diagrams of 2^{chords}
    // by chord count the 36 junction trees split 1/8/17/10, so the bound-2
    // corpus has 1 + 8*2 + 17*4 + 10*8 = 165 members
    auto c = cfg(6, {0, 3});
    CHECK(enum_standard_graphs(c, 0).size() == 1);
    CHECK(enum_standard_graphs(c, 1).size() == 36);
    CHECK(enum_standard_graphs(c, 2).size() == 165);
}

TEST_CASE("golden corpus sizes for (6,{0,2,4}) and (5,{0,2})") {
    CHECK(enum_standard_graphs(cfg(6, {0, 2, 4}), 1).size() == 20);
    CHECK(enum_standard_graphs(cfg(6, {0, 2, 4}), 2).size() == 81);
    CHECK(enum_standard_graphs(cfg(5, {0, 2}), 1).size() == 8);
}

TEST_CASE("fuzzed single-edit corruptions are rejected") {
    auto c = cfg(6, {0, 3});
    int rejected = 0, tried = 0;
    for (auto& g : enum_standard_graphs(c, 1)) {
        // corrupt: swap two adjacent rays somewhere in an item list
        for (int v : g.alive_vertices()) {
            const auto& items = g.items(v);
            for (int p = 0; p < (int)items.size(); ++p) {
                int q = (p + 1) % (int)items.size();
                if (items[p].kind != Item::Kind::Ray || items[q].kind != Item::Kind::Ray)
                    continue;
                StandardGraph bad = g;
                auto& mi = bad.items_mut(v);
                std::swap(mi[p], mi[q]);
                ++tried;
                if (!bad.validate().empty()) ++rejected;
            }
        }
    }
    CHECK(tried > 0);
    CHECK(rejected == tried);
}

TEST_CASE("zero-length chains are rejected") {
    auto g = two_junction_63();
    StandardGraph bad = g;
    bad.edge_mut(0).len = 0;
    auto v = bad.validate();
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("length") != std::string::npos);
}
