#include "actions.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace smg {

namespace {

struct WalkStep {
    int label;
    bool outgoing; // follow out-edge forward, or in-edge backwards
};

// Follows the three-step walk from v. Returns the end vertex, or -1 when a
// step touched an unknown truncation slot.
int run_walk(const CellGraph& cg, int v, const WalkStep steps[3]) {
    int cur = v;
    for (int k = 0; k < 3; ++k) {
        const WalkStep& s = steps[k];
        if (s.outgoing) {
            if (cg.unknown_out(cur, s.label)) return -1;
            int t = cg.out(cur, s.label);
            if (t >= 0) cur = t;
        } else {
            if (cg.unknown_in(cur, s.label)) return -1;
            int t = cg.in(cur, s.label);
            if (t >= 0) cur = t;
        }
    }
    return cur;
}

} // namespace

CellGraph act_basic(const CellGraph& cg, int j, int sign) {
    const SectorConfig& cfg = cg.config();
    if (!cfg.dominant(j)) throw std::invalid_argument("act_basic: label is subdominant");
    if (sign != 1 && sign != -1) throw std::invalid_argument("act_basic: sign must be +-1");
    j = cfg.mod(j);
    const int jp = cfg.successor(j);

    // Slot whose loop is expressed by a conjugated word and must be rebuilt,
    // versus the slot that inherits the other one's arcs unchanged.
    const int rebuilt = (sign > 0) ? jp : j;
    const int inherit_dst = (sign > 0) ? j : jp; // new label of the kept arcs
    const int inherit_src = (sign > 0) ? jp : j; // old label of the kept arcs

    CellGraph out(cfg);
    for (int v = 0; v < cg.vertex_count(); ++v) out.add_vertex();
    out.set_window(cg.window());
    auto assign = cg.face_assignment();
    std::swap(assign[j], assign[jp]);
    out.set_face_assignment(std::move(assign));

    for (const auto& e : cg.edges()) {
        if (e.label == j || e.label == jp) continue;
        out.add_edge(e.from, e.to, e.label);
    }
    for (int v = 0; v < cg.vertex_count(); ++v) {
        int t = cg.out(v, inherit_src);
        if (t >= 0) out.add_edge(v, t, inherit_dst);
    }

    // A_j rebuilds slot j_+ via (back j_+, fwd j, fwd j_+); the inverse
    // rebuilds slot j via (fwd j, fwd j_+, back j). Both in input labels.
    WalkStep steps_fwd[3] = {{jp, false}, {j, true}, {jp, true}};
    WalkStep steps_inv[3] = {{j, true}, {jp, true}, {j, false}};
    const WalkStep* steps = (sign > 0) ? steps_fwd : steps_inv;

    std::vector<std::pair<int, int>> emitted;
    std::vector<bool> aborted(cg.vertex_count(), false);
    for (int v = 0; v < cg.vertex_count(); ++v) {
        int end = run_walk(cg, v, steps);
        if (end < 0) {
            aborted[v] = true;
            continue;
        }
        if (end != v) emitted.push_back({v, end});
    }
    std::vector<bool> in_used(cg.vertex_count(), false);
    for (auto& [a, b] : emitted) {
        if (in_used[b])
            throw UnderflowError("act_basic: rebuilt edges collide near the truncation frontier");
        in_used[b] = true;
        out.add_edge(a, b, rebuilt);
    }

    // truncation flags
    for (int v = 0; v < cg.vertex_count(); ++v) {
        bool any_old = cg.has_unknown(v);
        for (int l = 0; l < cfg.n(); ++l) {
            if (l == rebuilt || l == inherit_dst) continue;
            if (cg.unknown_out(v, l)) out.set_unknown_out(v, l, true);
            if (cg.unknown_in(v, l)) out.set_unknown_in(v, l, true);
        }
        if (cg.unknown_out(v, inherit_src)) out.set_unknown_out(v, inherit_dst, true);
        if (cg.unknown_in(v, inherit_src)) out.set_unknown_in(v, inherit_dst, true);
        if (aborted[v]) out.set_unknown_out(v, rebuilt, true);
        // a rebuilt edge into v can start beyond the frontier only if v
        // itself sits on it
        if (any_old) out.set_unknown_in(v, rebuilt, true);
    }
    return out;
}

namespace {

// Positions of the structure's items around its junction, in ccw order.
std::vector<int> arc_positions(const StandardGraph& g, const Structure& s) {
    const int u = s.junction;
    const SectorConfig& cfg = g.config();
    std::vector<int> pos;
    switch (s.kind) {
        case StructureKind::I:
            pos.push_back(g.item_pos(u, Item::ray(cfg.mod(s.label + 1))));
            break;
        case StructureKind::V: {
            int p1 = g.item_pos(u, Item::ray(cfg.mod(s.label + 1)));
            int p2 = g.item_pos(u, Item::ray(cfg.mod(s.label + 2)));
            if (p1 < 0 || p2 < 0 || (p1 + 1) % g.degree(u) != p2)
                throw std::logic_error("V-structure arms are not cyclically adjacent");
            pos.push_back(p1);
            pos.push_back(p2);
            break;
        }
        case StructureKind::Y:
            pos.push_back(g.item_pos(u, Item::edge(s.stem_edge)));
            break;
    }
    for (int p : pos)
        if (p < 0) throw std::logic_error("structure item missing at junction");
    return pos;
}

void dissolve_if_chain_vertex(StandardGraph& g, int u) {
    if (g.degree(u) != 2) return;
    Item x = g.items(u)[0];
    Item y = g.items(u)[1];
    if (x.kind == Item::Kind::Edge && y.kind == Item::Kind::Edge) {
        EdgeRec& ex = g.edge_mut(x.index);
        EdgeRec& ey = g.edge_mut(y.index);
        int a = (ex.a == u) ? ex.b : ex.a;
        int b = (ey.a == u) ? ey.b : ey.a;
        int pos_b = g.item_pos(b, y);
        ex.a = a;
        ex.b = b;
        ex.len += ey.len;
        g.items_mut(b)[pos_b] = x;
        g.kill_edge(y.index);
        g.kill_vertex(u);
    } else if (x.kind == Item::Kind::Edge || y.kind == Item::Kind::Edge) {
        const Item& e = (x.kind == Item::Kind::Edge) ? x : y;
        const Item& r = (x.kind == Item::Kind::Edge) ? y : x;
        int a = g.edge_other(e.index, u);
        g.items_mut(a)[g.item_pos(a, e)] = r; // the ray re-roots; tail length is not tracked
        g.kill_edge(e.index);
        g.kill_vertex(u);
    } else {
        throw std::logic_error("degree-2 vertex with two rays cannot occur in a connected core");
    }
}

} // namespace

StandardGraph act_squared(const StandardGraph& g, int j, int sign) {
    const SectorConfig& cfg = g.config();
    if (!cfg.dominant(j)) throw std::invalid_argument("act_squared: label is subdominant");
    if (sign != 1 && sign != -1) throw std::invalid_argument("act_squared: sign must be +-1");
    auto s = g.find_structure(j);
    if (!s) return g; // no j-junction: A_j^2 is the identity

    StandardGraph h = g;
    const int u = s->junction;
    std::vector<int> arc = arc_positions(h, *s);
    const int d = h.degree(u);
    // pivot: the item the structure slides along (face j side when moving
    // forward, face j_+ side when moving backward)
    int pivot_pos = (sign > 0) ? (arc.front() + d - 1) % d : (arc.back() + 1) % d;
    Item pivot = h.items(u)[pivot_pos];

    std::vector<Item> arc_items;
    for (int p : arc) arc_items.push_back(h.items(u)[p]);

    // drops the arc items at u; replacement (if any) substitutes the pivot
    auto rebuild_u = [&](std::optional<Item> pivot_replacement) {
        std::vector<Item> ni;
        const std::vector<Item> old = h.items(u);
        for (int p = 0; p < (int)old.size(); ++p) {
            if (std::find(arc.begin(), arc.end(), p) != arc.end()) continue;
            if (p == pivot_pos && pivot_replacement) {
                ni.push_back(*pivot_replacement);
                continue;
            }
            ni.push_back(old[p]);
        }
        h.set_items(u, std::move(ni));
    };

    auto reroot_stem = [&](int new_end) {
        if (s->kind != StructureKind::Y) return;
        EdgeRec& e = h.edge_mut(s->stem_edge);
        if (e.a == u)
            e.a = new_end;
        else
            e.b = new_end;
    };

    // landing vertex items: edge back toward u first, then (moving forward)
    // the pivot continuation before the arc, or (moving backward) after it
    auto landing_items = [&](Item back, std::optional<Item> continuation) {
        std::vector<Item> vi;
        vi.push_back(back);
        if (sign > 0) {
            if (continuation) vi.push_back(*continuation);
            for (const Item& it : arc_items) vi.push_back(it);
        } else {
            for (const Item& it : arc_items) vi.push_back(it);
            if (continuation) vi.push_back(*continuation);
        }
        return vi;
    };

    if (pivot.kind == Item::Kind::Ray) {
        // step onto the neighboring infinite branch: new junction one vertex out
        int v = h.add_vertex();
        int en = h.add_edge(u, v, 1);
        rebuild_u(Item::edge(en));
        h.set_items(v, landing_items(Item::edge(en), pivot));
        reroot_stem(v);
    } else {
        const EdgeRec rec = h.edge(pivot.index); // copy before surgery
        int w = (rec.a == u) ? rec.b : rec.a;
        if (rec.len >= 2) {
            // land on the chain, splitting it
            int v = h.add_vertex();
            int e2 = h.add_edge(v, w, rec.len - 1);
            h.items_mut(w)[h.item_pos(w, pivot)] = Item::edge(e2);
            EdgeRec& e1 = h.edge_mut(pivot.index);
            e1.a = u;
            e1.b = v;
            e1.len = 1;
            rebuild_u(std::nullopt); // pivot stays at u
            h.set_items(v, landing_items(pivot, Item::edge(e2)));
            reroot_stem(v);
        } else {
            // land on the junction at the far end of the length-1 chain
            int pos_w = h.item_pos(w, pivot);
            auto& wi = h.items_mut(w);
            if (sign > 0)
                wi.insert(wi.begin() + pos_w, arc_items.begin(), arc_items.end());
            else
                wi.insert(wi.begin() + pos_w + 1, arc_items.begin(), arc_items.end());
            rebuild_u(std::nullopt);
            reroot_stem(w);
        }
    }

    dissolve_if_chain_vertex(h, u);
    return h;
}

StandardGraph apply_word(const StandardGraph& g, const BraidWord& word) {
    StandardGraph cur = g;
    for (const BraidLetter& l : word) {
        if (l.exponent != 2 && l.exponent != -2)
            throw std::invalid_argument(
                "apply_word: odd exponents leave the standard-order domain");
        cur = act_squared(cur, l.label, l.exponent > 0 ? 1 : -1);
    }
    return cur;
}

StandardGraph squared_via_basic(const StandardGraph& g, int j, int sign, int window) {
    CellGraph cg = to_cell_graph(g, window);
    cg = act_basic(cg, j, sign);
    cg = act_basic(cg, j, sign);
    return cell_to_standard(cg);
}

StandardGraph squared_via_basic_retry(const StandardGraph& g, int j, int sign, int window,
                                      int attempts) {
    for (int k = 0;; ++k) {
        try {
            return squared_via_basic(g, j, sign, window + 2 * k);
        } catch (const UnderflowError&) {
            if (k + 1 >= attempts) throw;
        }
    }
}

} // namespace smg
