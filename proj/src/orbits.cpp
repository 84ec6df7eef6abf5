#include "orbits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "actions.hpp"
#include "contraction.hpp"
#include "enumeration.hpp"

namespace smg {

std::set<std::string> orbit_bfs(const StandardGraph& g, int max_chain) {
    std::set<std::string> seen;
    std::deque<StandardGraph> frontier;
    seen.insert(g.canonical());
    frontier.push_back(g);
    while (!frontier.empty()) {
        StandardGraph cur = std::move(frontier.front());
        frontier.pop_front();
        for (int j : cur.config().dominant_indices()) {
            for (int sign : {+1, -1}) {
                StandardGraph next = act_squared(cur, j, sign);
                if (next.max_chain_len() > max_chain) continue;
                auto key = next.canonical();
                if (seen.insert(key).second) frontier.push_back(next);
            }
        }
    }
    return seen;
}

Classification classify_components(const SectorConfig& config, int max_chain) {
    Classification out;
    out.corpus = enum_standard_graphs(config, max_chain);
    const bool connected_case = config.has_adjacent_dominant_pair();
    std::map<std::string, ComponentClass> by_key;
    for (int i = 0; i < (int)out.corpus.size(); ++i) {
        ContractionResult res = connected_case ? to_single_junction(out.corpus[i])
                                               : to_one_y(out.corpus[i]);
        out.max_intermediate_junctions =
            std::max(out.max_intermediate_junctions, res.max_junctions);
        out.max_intermediate_chain = std::max(out.max_intermediate_chain, res.max_chain_len);
        std::string key = connected_case
                              ? std::string("star")
                              : "k=" + std::to_string(out.corpus[i].bounded_face_count());
        auto& cls = by_key[key];
        std::string canon = res.graph.canonical();
        if (cls.members.empty()) {
            cls.key = key;
            cls.representative_canonical = canon;
        } else if (cls.representative_canonical != canon) {
            throw std::logic_error("classify_components: same key with different canonical forms");
        }
        cls.members.push_back(i);
    }
    for (auto& [k, cls] : by_key) out.classes.push_back(std::move(cls));
    return out;
}

int zeros_of_eigenfunction(const StandardGraph& g) {
    if (!g.config().alternating())
        throw std::invalid_argument(
            "zeros_of_eigenfunction: requires alternating subdominant sectors (k = n/2)");
    return g.bounded_face_count();
}

} // namespace smg
