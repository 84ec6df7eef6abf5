#include "enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace smg {

std::int64_t schroeder(int k) {
    if (k < 0) throw std::invalid_argument("schroeder: negative index");
    if (k > 26) throw std::invalid_argument("schroeder: index too large for 64-bit result");
    std::vector<std::int64_t> a{1, 1};
    for (int n = 2; n <= k; ++n)
        a.push_back((3 * (2 * (std::int64_t)n - 1) * a[n - 1] - (n - 2) * a[n - 2]) / (n + 1));
    return a[k];
}

namespace {

bool chords_cross(std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = x;
    auto [c, d] = y;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

} // namespace

std::vector<ChordDiagram> enum_chord_diagrams(int m) {
    if (m < 3) throw std::invalid_argument("enum_chord_diagrams: m must be >= 3");
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < m; ++a)
        for (int b = a + 2; b < m; ++b) {
            if (a == 0 && b == m - 1) continue; // cyclically adjacent
            all.push_back({a, b});
        }
    std::vector<ChordDiagram> out;
    std::vector<std::pair<int, int>> chosen;
    std::function<void(int)> rec = [&](int idx) {
        if (idx == (int)all.size()) {
            out.push_back({m, chosen});
            return;
        }
        rec(idx + 1);
        for (const auto& c : chosen)
            if (chords_cross(all[idx], c)) return;
        chosen.push_back(all[idx]);
        rec(idx + 1);
        chosen.pop_back();
    };
    rec(0);
    for (auto& d : out) std::sort(d.chords.begin(), d.chords.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ChordDiagram> enum_junction_trees(const SectorConfig& config) {
    auto all = enum_chord_diagrams(config.n());
    std::vector<ChordDiagram> out;
    for (auto& d : all) {
        bool ok = true;
        for (auto& [a, b] : d.chords)
            if (config.subdominant(a) && config.subdominant(b)) ok = false;
        if (ok) out.push_back(std::move(d));
    }
    return out;
}

namespace {

// Boundary element of a sub-polygon during recursive dissection: either a
// polygon side (which becomes a ray) or a chord (which becomes a chain).
struct Element {
    bool is_side;
    int ray;     // side: ray index
    int edge_id; // chord: graph edge id
    int from, to; // polygon vertices, ccw
};

// rotate a cyclic element list so the element leaving `vertex` comes first
void rotate_to_start(std::vector<Element>& els, int vertex) {
    for (int i = 0; i < (int)els.size(); ++i) {
        if (els[i].from == vertex) {
            std::rotate(els.begin(), els.begin() + i, els.end());
            return;
        }
    }
    throw std::logic_error("dissection: no boundary element leaves the chord endpoint");
}

void split_region(StandardGraph& g, std::vector<Element> boundary,
                  std::vector<std::pair<int, int>> chords,
                  std::map<int, std::pair<int, int>>& edge_ends) {
    if (chords.empty()) {
        int v = g.add_vertex();
        std::vector<Item> items;
        for (const Element& el : boundary) {
            if (el.is_side) {
                items.push_back(Item::ray(el.ray));
            } else {
                items.push_back(Item::edge(el.edge_id));
                auto& ends = edge_ends[el.edge_id];
                if (ends.first == -1)
                    ends.first = v;
                else
                    ends.second = v;
            }
        }
        g.set_items(v, std::move(items));
        return;
    }
    auto chord = chords.back();
    chords.pop_back();
    int eid = g.add_edge(-1, -1, 1); // endpoints patched in at the leaves
    edge_ends[eid] = {-1, -1};

    // side A covers the ccw vertex arc [chord.first .. chord.second];
    // non-crossing makes endpoint membership decide each element's side
    auto in_arc = [&](int v) { return v >= chord.first && v <= chord.second; };
    std::vector<Element> ba, bb;
    for (const Element& el : boundary) {
        if (in_arc(el.from) && in_arc(el.to))
            ba.push_back(el);
        else
            bb.push_back(el);
    }
    rotate_to_start(ba, chord.first);
    rotate_to_start(bb, chord.second);
    ba.push_back({false, -1, eid, chord.second, chord.first});
    bb.push_back({false, -1, eid, chord.first, chord.second});
    std::vector<std::pair<int, int>> ca, cb;
    for (auto& c : chords) {
        if (in_arc(c.first) && in_arc(c.second))
            ca.push_back(c);
        else
            cb.push_back(c);
    }
    split_region(g, std::move(ba), std::move(ca), edge_ends);
    split_region(g, std::move(bb), std::move(cb), edge_ends);
}

} // namespace

StandardGraph graph_from_diagram(const SectorConfig& config, const ChordDiagram& d,
                                 const std::vector<int>& chain_lens) {
    if ((int)chain_lens.size() != (int)d.chords.size())
        throw std::invalid_argument("graph_from_diagram: one chain length per chord required");
    StandardGraph g(config);
    std::vector<Element> boundary;
    for (int v = 0; v < d.m; ++v)
        boundary.push_back({true, (v + 1) % d.m, -1, v, (v + 1) % d.m});
    std::map<int, std::pair<int, int>> edge_ends;
    std::vector<std::pair<int, int>> chords = d.chords;
    split_region(g, std::move(boundary), std::move(chords), edge_ends);
    for (auto& [eid, ends] : edge_ends) {
        g.edge_mut(eid).a = ends.first;
        g.edge_mut(eid).b = ends.second;
    }
    // chain lengths follow the sorted chord order; match edges to chords by
    // their flanking faces (chord endpoints = flank pair)
    auto fm = g.face_map();
    if (!fm) throw std::logic_error("graph_from_diagram: construction produced invalid graph");
    for (int e : g.alive_edges()) {
        auto [fa, fb] = g.edge_flanks(e, *fm);
        std::pair<int, int> key = std::minmax(fa, fb);
        auto it = std::find(d.chords.begin(), d.chords.end(), key);
        if (it == d.chords.end())
            throw std::logic_error("graph_from_diagram: edge flanks do not match any chord");
        g.edge_mut(e).len = chain_lens[it - d.chords.begin()];
    }
    return g;
}

ChordDiagram junction_tree_of(const StandardGraph& g) {
    auto fm = g.face_map();
    if (!fm) throw std::runtime_error("junction_tree_of: invalid graph");
    ChordDiagram d;
    d.m = g.config().n();
    for (int e : g.alive_edges()) {
        auto [fa, fb] = g.edge_flanks(e, *fm);
        d.chords.push_back(std::minmax(fa, fb));
    }
    std::sort(d.chords.begin(), d.chords.end());
    return d;
}

std::vector<StandardGraph> enum_standard_graphs(const SectorConfig& config, int max_chain) {
    if (max_chain < 0) throw std::invalid_argument("enum_standard_graphs: negative bound");
    std::vector<StandardGraph> out;
    for (const ChordDiagram& d : enum_junction_trees(config)) {
        const int k = (int)d.chords.size();
        if (k > 0 && max_chain == 0) continue;
        std::vector<int> lens(k, 1);
        while (true) {
            out.push_back(graph_from_diagram(config, d, lens));
            int i = 0;
            while (i < k && lens[i] == max_chain) lens[i++] = 1;
            if (i == k) break;
            lens[i]++;
        }
    }
    return out;
}

} // namespace smg
