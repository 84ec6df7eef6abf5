#pragma once

#include <cstdint>
#include <vector>

#include "config.hpp"
#include "standard_graph.hpp"

namespace smg {

// Small (little) Schroeder numbers 1, 1, 3, 11, 45, 197, ...
std::int64_t schroeder(int k);

// n-gon with pairwise non-crossing chords; no chord joins cyclically
// adjacent vertices. Vertices are identified with sector indices, so there
// is no rotation quotient. Chords are stored sorted.
struct ChordDiagram {
    int m = 0;
    std::vector<std::pair<int, int>> chords;
    bool operator==(const ChordDiagram& o) const { return m == o.m && chords == o.chords; }
    bool operator<(const ChordDiagram& o) const {
        return m != o.m ? m < o.m : chords < o.chords;
    }
};

// All diagrams on an m-gon (m >= 3); |result| = schroeder(m - 2).
std::vector<ChordDiagram> enum_chord_diagrams(int m);

// Diagrams with no chord joining two subdominant vertices; these are exactly
// the duals of junction trees of standard graphs for the configuration.
std::vector<ChordDiagram> enum_junction_trees(const SectorConfig& config);

// Realizes a junction-tree diagram as the standard graph whose chains carry
// the given lengths (one per chord, in the diagram's sorted chord order).
StandardGraph graph_from_diagram(const SectorConfig& config, const ChordDiagram& d,
                                 const std::vector<int>& chain_lens);

// Dual extraction: one chord per inter-junction chain, labeled by its two
// flanking faces.
ChordDiagram junction_tree_of(const StandardGraph& g);

// All valid normalized standard graphs whose chain lengths are <= max_chain,
// duplicate-free, in deterministic order.
std::vector<StandardGraph> enum_standard_graphs(const SectorConfig& config, int max_chain);

} // namespace smg
