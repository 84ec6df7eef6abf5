#pragma once

#include <set>
#include <string>
#include <vector>

#include "standard_graph.hpp"

namespace smg {

// Breadth-first closure of {g} under all squared actions, discarding states
// whose chain lengths exceed max_chain. Returns canonical strings.
std::set<std::string> orbit_bfs(const StandardGraph& g, int max_chain);

struct ComponentClass {
    std::string key;                      // "star" or "k=<bounded faces>"
    std::string representative_canonical; // canonical contraction form
    std::vector<int> members;             // indices into the enumerated corpus
};

struct Classification {
    std::vector<StandardGraph> corpus;
    std::vector<ComponentClass> classes;
    // growth of intermediate graphs during contraction (no a-priori bound)
    int max_intermediate_junctions = 0;
    int max_intermediate_chain = 0;
};

// Partition of enum_standard_graphs(config, max_chain) by mutual
// reachability, certified through contraction canonical forms.
Classification classify_components(const SectorConfig& config, int max_chain);

// Number of zeros of the eigenfunction in the alternating (k = n/2) case;
// equals the bounded face count.
int zeros_of_eigenfunction(const StandardGraph& g);

} // namespace smg
