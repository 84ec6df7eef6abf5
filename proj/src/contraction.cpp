#include "contraction.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace smg {

namespace {

void track(ContractionResult& res, const StandardGraph& g) {
    res.max_junctions = std::max(res.max_junctions, (int)g.junction_list().size());
    res.max_chain_len = std::max(res.max_chain_len, g.max_chain_len());
}

void apply_letter(ContractionResult& res, int label, int exponent) {
    res.word.push_back({label, exponent});
    res.graph = act_squared(res.graph, label, exponent > 0 ? 1 : -1);
    res.steps++;
    track(res, res.graph);
}

// kinds of the structures at the adjacent dominant pair (j_-, j), both
// required to sit at the same junction u0
struct AdjacentPair {
    Structure at_prev; // j_-
    Structure at_j;    // j
};

AdjacentPair locate_pair(const StandardGraph& g, int u0, int j, const char* who) {
    const SectorConfig& cfg = g.config();
    if (!cfg.dominant(j)) throw std::invalid_argument(std::string(who) + ": j subdominant");
    int jm = cfg.predecessor(j);
    auto sm = g.find_structure(jm);
    auto sj = g.find_structure(j);
    if (!sm || sm->junction != u0)
        throw std::invalid_argument(std::string(who) + ": no " + std::to_string(jm) +
                                    "-structure at the given junction");
    if (!sj || sj->junction != u0)
        throw std::invalid_argument(std::string(who) + ": no " + std::to_string(j) +
                                    "-structure at the given junction");
    return {*sm, *sj};
}

int stem_len(const StandardGraph& g, const Structure& s) {
    return g.edge(s.stem_edge).len;
}

} // namespace

ContractionResult exchange_YV(const StandardGraph& g, int u0, int j) {
    auto pair = locate_pair(g, u0, j, "exchange_YV");
    const int jm = g.config().predecessor(j);
    ContractionResult res(g);
    track(res, g);
    if (pair.at_prev.kind == StructureKind::Y && pair.at_j.kind == StructureKind::V) {
        int s = stem_len(g, pair.at_prev);
        for (int k = 0; k < s; ++k) apply_letter(res, j, +2);
        for (int k = 0; k < s; ++k) apply_letter(res, jm, +2);
    } else if (pair.at_prev.kind == StructureKind::V && pair.at_j.kind == StructureKind::Y) {
        int s = stem_len(g, pair.at_j);
        for (int k = 0; k < s; ++k) apply_letter(res, jm, -2);
        for (int k = 0; k < s; ++k) apply_letter(res, j, -2);
    } else {
        throw std::invalid_argument("exchange_YV: structures at (" + std::to_string(jm) + "," +
                                    std::to_string(j) + ") are not a {Y,V} pair");
    }
    auto a = res.graph.find_structure(jm);
    auto b = res.graph.find_structure(j);
    if (!a || !b || a->kind != pair.at_j.kind || b->kind != pair.at_prev.kind ||
        a->junction != b->junction)
        throw std::logic_error("exchange_YV: postcondition failed");
    return res;
}

ContractionResult y_to_v_with_I(const StandardGraph& g, int u0, int j) {
    auto pair = locate_pair(g, u0, j, "y_to_v_with_I");
    const int jm = g.config().predecessor(j);
    const int before = (int)g.junction_list().size();
    ContractionResult res(g);
    track(res, g);
    if (pair.at_prev.kind == StructureKind::I && pair.at_j.kind == StructureKind::Y) {
        int s = stem_len(g, pair.at_j);
        for (int k = 0; k < s; ++k) apply_letter(res, jm, -2);
        for (int k = 0; k < s; ++k) apply_letter(res, j, -2);
    } else if (pair.at_prev.kind == StructureKind::Y && pair.at_j.kind == StructureKind::I) {
        int s = stem_len(g, pair.at_prev);
        for (int k = 0; k < s; ++k) apply_letter(res, j, +2);
        for (int k = 0; k < s; ++k) apply_letter(res, jm, +2);
    } else {
        throw std::invalid_argument("y_to_v_with_I: structures at (" + std::to_string(jm) + "," +
                                    std::to_string(j) + ") are not an {I,Y} pair");
    }
    if ((int)res.graph.junction_list().size() != before - 1)
        throw std::logic_error("y_to_v_with_I: junction count did not drop by one");
    return res;
}

ContractionResult merge_YY(const StandardGraph& g, int u0, int j) {
    auto pair = locate_pair(g, u0, j, "merge_YY");
    const int jm = g.config().predecessor(j);
    if (pair.at_prev.kind != StructureKind::Y || pair.at_j.kind != StructureKind::Y)
        throw std::invalid_argument("merge_YY: structures at (" + std::to_string(jm) + "," +
                                    std::to_string(j) + ") are not both Y");
    const int before = (int)g.junction_list().size();
    ContractionResult res(g);
    track(res, g);
    int s = stem_len(g, pair.at_prev);
    for (int k = 0; k < s; ++k) apply_letter(res, j, +2);
    for (int k = 0; k < s; ++k) apply_letter(res, jm, +2);
    if ((int)res.graph.junction_list().size() != before - 1)
        throw std::logic_error("merge_YY: junction count did not drop by one");
    auto a = res.graph.find_structure(jm);
    auto b = res.graph.find_structure(j);
    if (!a || a->kind != StructureKind::V || !b || b->kind != StructureKind::Y)
        throw std::logic_error("merge_YY: postcondition failed");
    return res;
}

ContractionResult to_ivy(const StandardGraph& g) {
    if (!g.valid()) throw std::invalid_argument("to_ivy: input graph invalid");
    ContractionResult res(g);
    track(res, g);
    const int u0 = g.ray_vertex(0); // vertex ids are stable across the moves below
    while (true) {
        const StandardGraph& h = res.graph;
        std::vector<bool> is_y(h.raw_vertex_count(), false);
        for (const Structure& s : h.all_structures())
            if (s.kind == StructureKind::Y) is_y[s.y_junction] = true;
        std::vector<int> non_y;
        for (int v : h.junction_list())
            if (!is_y[v]) non_y.push_back(v);
        if ((int)non_y.size() <= 1) break;

        // farthest non-Y junction from the fixed root
        int u1 = -1;
        long long best = -1;
        for (int v : non_y) {
            if (v == u0) continue;
            long long d = h.tree_distance(v, u0);
            if (d > best) {
                best = d;
                u1 = v;
            }
        }
        if (u1 < 0) break; // only u0 itself is non-Y

        // first chain on the path u1 -> u0
        std::vector<int> parent_edge(h.raw_vertex_count(), -1);
        std::vector<int> stack{u0};
        std::vector<bool> seen(h.raw_vertex_count(), false);
        seen[u0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Item& it : h.items(v)) {
                if (it.kind != Item::Kind::Edge) continue;
                int w = h.edge_other(it.index, v);
                if (!seen[w]) {
                    seen[w] = true;
                    parent_edge[w] = it.index;
                    stack.push_back(w);
                }
            }
        }
        int e1 = parent_edge[u1];
        auto fm = h.face_map();
        if (!fm) throw std::logic_error("to_ivy: intermediate graph invalid");
        int pos_u1 = h.item_pos(u1, Item::edge(e1));
        int w = h.edge_other(e1, u1);
        int pos_w = h.item_pos(w, Item::edge(e1));
        int f_out = fm->after(u1, pos_u1); // face on the left walking u1 -> w
        int f_in = fm->after(w, pos_w);    // face on the left walking w -> u1

        std::optional<BraidLetter> chosen;
        if (h.config().dominant(f_out)) {
            // f_out-edge directed u1 -> w: structure at the f_out-junction moves toward u0
            auto s = h.find_structure(f_out);
            if (s && s->junction == u1) chosen = BraidLetter{f_out, +2};
        }
        if (!chosen && h.config().dominant(f_in)) {
            // f_in-edge directed w -> u1: u1 is the predecessor label's junction
            int lab = h.config().predecessor(f_in);
            auto s = h.find_structure(lab);
            if (s && s->junction == u1) chosen = BraidLetter{lab, -2};
        }
        if (!chosen)
            throw std::logic_error("to_ivy: no applicable action at the farthest junction");

        long long metric_before = h.u_metric(u0);
        apply_letter(res, chosen->label, chosen->exponent);
        long long metric_after = res.graph.u_metric(u0);
        if (metric_after >= metric_before)
            throw std::logic_error("to_ivy: u0-metric did not decrease");
    }
    if (!res.graph.is_ivy()) throw std::logic_error("to_ivy: result is not in ivy form");
    return res;
}

namespace {

// kind of the structure at each dominant label, for an ivy-form graph
std::map<int, StructureKind> kinds_by_label(const StandardGraph& g) {
    std::map<int, StructureKind> out;
    for (const Structure& s : g.all_structures()) out[s.label] = s.kind;
    return out;
}

int common_root(const StandardGraph& g, const char* who) {
    int root = -1;
    for (const Structure& s : g.all_structures()) {
        if (root == -1) root = s.junction;
        if (s.junction != root)
            throw std::logic_error(std::string(who) + ": structures not rooted at one junction");
    }
    if (root == -1) throw std::logic_error(std::string(who) + ": no structures found");
    return root;
}

void append(ContractionResult& into, const ContractionResult& piece) {
    into.word.insert(into.word.end(), piece.word.begin(), piece.word.end());
    into.graph = piece.graph;
    into.steps += piece.steps;
    into.max_junctions = std::max(into.max_junctions, piece.max_junctions);
    into.max_chain_len = std::max(into.max_chain_len, piece.max_chain_len);
}

} // namespace

ContractionResult to_single_junction(const StandardGraph& g) {
    if (!g.config().has_adjacent_dominant_pair())
        throw std::invalid_argument("to_single_junction: no adjacent dominant pair");
    ContractionResult res = to_ivy(g);
    while (true) {
        auto kinds = kinds_by_label(res.graph);
        std::vector<int> labels;
        for (auto& [lab, k] : kinds) labels.push_back(lab);
        const int L = (int)labels.size();
        auto kind_at = [&](int idx) { return kinds[labels[((idx % L) + L) % L]]; };

        int y_idx = -1;
        for (int i = 0; i < L; ++i)
            if (kind_at(i) == StructureKind::Y) y_idx = i;
        if (y_idx < 0) break;
        int root = common_root(res.graph, "to_single_junction");

        // adjacent {I,Y} converts directly; adjacent {Y,Y} merges; otherwise
        // shuttle a Y toward the nearest I through the V's in between
        bool acted = false;
        for (int i = 0; i < L && !acted; ++i) {
            auto a = kind_at(i), b = kind_at(i + 1);
            int labj = labels[(i + 1) % L];
            if ((a == StructureKind::I && b == StructureKind::Y) ||
                (a == StructureKind::Y && b == StructureKind::I)) {
                append(res, y_to_v_with_I(res.graph, root, labj));
                acted = true;
            }
        }
        for (int i = 0; i < L && !acted; ++i) {
            if (kind_at(i) == StructureKind::Y && kind_at(i + 1) == StructureKind::Y) {
                append(res, merge_YY(res.graph, root, labels[(i + 1) % L]));
                acted = true;
            }
        }
        if (!acted) {
            // nearest (Y, I) pair measured in dominant-label steps
            int best_y = -1, best_d = L + 1, best_dir = 0;
            for (int i = 0; i < L; ++i) {
                if (kind_at(i) != StructureKind::Y) continue;
                for (int d = 1; d < L; ++d) {
                    if (kind_at(i + d) == StructureKind::I && d < best_d) {
                        bool all_v = true;
                        for (int t = 1; t < d; ++t)
                            if (kind_at(i + t) != StructureKind::V) all_v = false;
                        if (all_v) {
                            best_d = d;
                            best_y = i;
                            best_dir = +1;
                        }
                    }
                    if (kind_at(i - d) == StructureKind::I && d < best_d) {
                        bool all_v = true;
                        for (int t = 1; t < d; ++t)
                            if (kind_at(i - t) != StructureKind::V) all_v = false;
                        if (all_v) {
                            best_d = d;
                            best_y = i;
                            best_dir = -1;
                        }
                    }
                }
            }
            if (best_y < 0)
                throw std::logic_error("to_single_junction: no I-structure reachable from a Y");
            // one exchange step toward the I
            int y_lab = labels[best_y];
            int nb = labels[((best_y + best_dir) % L + L) % L];
            int hi = (best_dir > 0) ? nb : y_lab; // exchange acts on the pair (j_-, j)
            append(res, exchange_YV(res.graph, common_root(res.graph, "to_single_junction"), hi));
            acted = true;
        }
    }
    if ((int)res.graph.junction_list().size() != 1)
        throw std::logic_error("to_single_junction: more than one junction left");
    return res;
}

ContractionResult to_one_y(const StandardGraph& g) {
    if (g.config().has_adjacent_dominant_pair())
        throw std::invalid_argument("to_one_y: adjacent dominant faces present");
    const int faces_before = g.bounded_face_count();
    ContractionResult res = to_ivy(g);
    while (true) {
        auto kinds = kinds_by_label(res.graph);
        std::vector<int> labels;
        for (auto& [lab, k] : kinds) labels.push_back(lab);
        const int L = (int)labels.size();
        auto kind_at = [&](int idx) { return kinds[labels[((idx % L) + L) % L]]; };
        std::vector<int> ys;
        for (int i = 0; i < L; ++i)
            if (kind_at(i) == StructureKind::Y) ys.push_back(i);
        if ((int)ys.size() <= 1) break;
        int root = common_root(res.graph, "to_one_y");
        bool acted = false;
        for (int i = 0; i < L && !acted; ++i) {
            if (kind_at(i) == StructureKind::Y && kind_at(i + 1) == StructureKind::Y) {
                append(res, merge_YY(res.graph, root, labels[(i + 1) % L]));
                acted = true;
            }
        }
        if (!acted) {
            // shuttle the first Y one step toward the next Y counterclockwise
            int i = ys[0];
            append(res, exchange_YV(res.graph, root, labels[(i + 1) % L]));
        }
    }
    // park the surviving Y at the smallest dominant label
    while (true) {
        auto kinds = kinds_by_label(res.graph);
        std::vector<int> labels;
        for (auto& [lab, k] : kinds) labels.push_back(lab);
        const int L = (int)labels.size();
        int y_idx = -1;
        for (int i = 0; i < L; ++i)
            if (kinds[labels[i]] == StructureKind::Y) y_idx = i;
        if (y_idx <= 0) break; // no Y, or already at the smallest dominant label
        int root = common_root(res.graph, "to_one_y");
        append(res, exchange_YV(res.graph, root, labels[y_idx]));
    }
    if (!res.graph.is_ivy())
        throw std::logic_error("to_one_y: result not in ivy form");
    if (res.graph.bounded_face_count() != faces_before)
        throw std::logic_error("to_one_y: bounded face count changed");
    return res;
}

} // namespace smg
