#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "serialize.hpp"
#include "standard_graph.hpp"

namespace fixtures {

inline smg::SectorConfig cfg(int n, std::vector<int> subs) {
    std::string err;
    auto c = smg::SectorConfig::create(n, subs, &err);
    REQUIRE_MESSAGE(c.has_value(), err);
    return *c;
}

inline smg::StandardGraph from_text(const std::string& text) {
    return smg::parse_standard_graph(text);
}

// The worked example graph: junctions u, v, y with an I-structure at the
// 1-junction v, a V-structure at the 2-junction v, an I-structure at the
// 4-junction u, and a Y-structure at the 5-junction u (Y-junction y).
inline smg::StandardGraph fig4() {
    return from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 3\n"
        "vertex 0 : edge(1,1) ray5 edge(2,1)\n" // u
        "vertex 1 : edge(0,1) ray2 ray3 ray4\n" // v
        "vertex 2 : edge(0,1) ray0 ray1\n");    // y
}

// Two junctions for (6,{0,3}): rays 1,2,3 on one, 4,5,0 on the other.
inline smg::StandardGraph two_junction_63(int len = 1) {
    return from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 3\n"
        "vertex 0 : ray1 ray2 ray3 edge(1," + std::to_string(len) + ")\n"
        "vertex 1 : ray4 ray5 ray0 edge(0," + std::to_string(len) + ")\n");
}

// Alternating config with no 1-junction: the faces 1 and 3 never meet.
inline smg::StandardGraph no_1_junction_624() {
    return from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 2 4\n"
        "vertex 0 : ray0 ray1 ray2 edge(1,1)\n"
        "vertex 1 : edge(0,1) ray3 ray4 ray5\n");
}

// Y-structure at the 1-junction with a stem of the given length
// (bounded faces = len).
inline smg::StandardGraph y_chain_624(int len) {
    return from_text(
        "sgraph 1\n"
        "n 6\n"
        "sub 0 2 4\n"
        "vertex 0 : edge(1," + std::to_string(len) + ") ray2 ray3\n"
        "vertex 1 : edge(0," + std::to_string(len) + ") ray4 ray5 ray0 ray1\n");
}

} // namespace fixtures
