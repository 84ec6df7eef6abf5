#include "standard_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace smg {

const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::I: return "I";
        case StructureKind::V: return "V";
        case StructureKind::Y: return "Y";
    }
    return "?";
}

StandardGraph StandardGraph::star(const SectorConfig& config) {
    StandardGraph g(config);
    int c = g.add_vertex();
    std::vector<Item> items;
    for (int r = 0; r < config.n(); ++r) items.push_back(Item::ray(r));
    g.set_items(c, std::move(items));
    return g;
}

int StandardGraph::add_vertex() {
    verts_.push_back({});
    return (int)verts_.size() - 1;
}

int StandardGraph::add_edge(int a, int b, int len) {
    edges_.push_back({a, b, len, true});
    return (int)edges_.size() - 1;
}

void StandardGraph::set_items(int v, std::vector<Item> items) {
    verts_[v].items = std::move(items);
}

int StandardGraph::edge_other(int e, int v) const {
    const EdgeRec& r = edges_[e];
    if (r.a == v) return r.b;
    if (r.b == v) return r.a;
    throw std::logic_error("edge_other: vertex not an endpoint");
}

std::vector<int> StandardGraph::alive_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < (int)verts_.size(); ++v)
        if (verts_[v].alive) out.push_back(v);
    return out;
}

std::vector<int> StandardGraph::alive_edges() const {
    std::vector<int> out;
    for (int e = 0; e < (int)edges_.size(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

int StandardGraph::item_pos(int v, const Item& it) const {
    const auto& items = verts_[v].items;
    for (int p = 0; p < (int)items.size(); ++p)
        if (items[p] == it) return p;
    return -1;
}

int StandardGraph::ray_vertex(int r) const {
    for (int v : alive_vertices())
        if (item_pos(v, Item::ray(r)) >= 0) return v;
    return -1;
}

namespace {

// Structural consistency strong enough for the contour walk to be run.
bool structurally_sound(const StandardGraph& g, std::vector<std::string>* out) {
    bool ok = true;
    const int n = g.config().n();
    std::vector<int> ray_count(n, 0);
    for (int v : g.alive_vertices()) {
        for (const Item& it : g.items(v)) {
            if (it.kind == Item::Kind::Ray) {
                if (it.index < 0 || it.index >= n) {
                    if (out) out->push_back("ray index out of range at vertex " + std::to_string(v));
                    ok = false;
                } else {
                    ray_count[it.index]++;
                }
            } else {
                if (!g.edge_alive(it.index)) {
                    if (out) out->push_back("dead edge referenced at vertex " + std::to_string(v));
                    ok = false;
                    continue;
                }
                const EdgeRec& e = g.edge(it.index);
                if (e.a != v && e.b != v) {
                    if (out)
                        out->push_back("edge " + std::to_string(it.index) +
                                       " listed at non-endpoint vertex " + std::to_string(v));
                    ok = false;
                }
            }
        }
    }
    for (int r = 0; r < n; ++r) {
        if (ray_count[r] != 1) {
            if (out)
                out->push_back("ray " + std::to_string(r) + " appears " +
                               std::to_string(ray_count[r]) + " times (expected 1)");
            ok = false;
        }
    }
    for (int e : g.alive_edges()) {
        const EdgeRec& r = g.edge(e);
        if (!g.vertex_alive(r.a) || !g.vertex_alive(r.b) ||
            g.item_pos(r.a, Item::edge(e)) < 0 || g.item_pos(r.b, Item::edge(e)) < 0) {
            if (out) out->push_back("edge " + std::to_string(e) + " lacks reciprocal items");
            ok = false;
        }
        if (r.len < 1) {
            if (out) out->push_back("edge " + std::to_string(e) + " has chain length < 1");
            ok = false;
        }
    }
    // tree check: connected and |E| = |V| - 1
    auto verts = g.alive_vertices();
    if (verts.empty()) {
        if (out) out->push_back("graph has no vertices");
        return false;
    }
    if (!ok) return false;
    std::vector<int> stack{verts[0]};
    std::vector<bool> seen(g.raw_vertex_count(), false);
    seen[verts[0]] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (const Item& it : g.items(v)) {
            if (it.kind != Item::Kind::Edge) continue;
            int w = g.edge_other(it.index, v);
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    if (reached != (int)verts.size()) {
        if (out) out->push_back("core is disconnected");
        ok = false;
    }
    if ((int)g.alive_edges().size() != (int)verts.size() - 1) {
        if (out) out->push_back("core is not a tree (edge count != vertex count - 1)");
        ok = false;
    }
    return ok;
}

} // namespace

std::optional<StandardGraph::FaceMap> StandardGraph::face_map(std::string* error) const {
    if (!structurally_sound(*this, nullptr)) {
        if (error) *error = "graph structurally unsound";
        return std::nullopt;
    }
    const int n = config_.n();
    FaceMap fm;
    fm.gap.assign(verts_.size(), {});
    long long total_gaps = 0;
    for (int v = 0; v < (int)verts_.size(); ++v) {
        if (!verts_[v].alive) continue;
        if (verts_[v].items.empty()) {
            if (error) *error = "vertex " + std::to_string(v) + " has no items";
            return std::nullopt;
        }
        fm.gap[v].assign(verts_[v].items.size(), -1);
        total_gaps += (long long)verts_[v].items.size();
    }
    int v0 = ray_vertex(0);
    if (v0 < 0) {
        if (error) *error = "ray 0 missing";
        return std::nullopt;
    }
    int p0 = item_pos(v0, Item::ray(0));
    int v = v0, p = p0, face = 0;
    long long steps = 0;
    while (true) {
        if (fm.gap[v][p] != -1) {
            if (error) *error = "contour walk revisited a gap; embedding inconsistent";
            return std::nullopt;
        }
        fm.gap[v][p] = face;
        ++steps;
        int np = (p + 1) % (int)verts_[v].items.size();
        const Item& it = verts_[v].items[np];
        if (it.kind == Item::Kind::Ray) {
            if (it.index != (face + 1) % n) {
                if (error)
                    *error = "cyclic ray order violated at vertex " + std::to_string(v) +
                             ": expected ray " + std::to_string((face + 1) % n) + ", found ray " +
                             std::to_string(it.index);
                return std::nullopt;
            }
            face = it.index;
            p = np;
        } else {
            int w = edge_other(it.index, v);
            int q = item_pos(w, Item::edge(it.index));
            v = w;
            p = q;
        }
        if (v == v0 && p == p0) break;
        if (steps > total_gaps) {
            if (error) *error = "contour walk failed to close";
            return std::nullopt;
        }
    }
    if (steps != total_gaps) {
        if (error) *error = "contour walk did not cover every gap";
        return std::nullopt;
    }
    return fm;
}

std::pair<int, int> StandardGraph::edge_flanks(int e, const FaceMap& fm) const {
    const EdgeRec& r = edges_[e];
    int pa = item_pos(r.a, Item::edge(e));
    int pb = item_pos(r.b, Item::edge(e));
    return {fm.after(r.a, pa), fm.after(r.b, pb)};
}

std::vector<std::string> StandardGraph::validate() const {
    std::vector<std::string> out = config_.violations();
    if (!structurally_sound(*this, &out)) return out;
    // normalization: every core vertex of a multi-vertex core is a junction
    auto verts = alive_vertices();
    if (verts.size() > 1) {
        for (int v : verts)
            if (degree(v) < 3)
                out.push_back("vertex " + std::to_string(v) +
                              " has degree < 3 (not normalized)");
    }
    std::string err;
    auto fm = face_map(&err);
    if (!fm) {
        out.push_back(err);
        return out;
    }
    for (int e : alive_edges()) {
        auto [fa, fb] = edge_flanks(e, *fm);
        if (config_.subdominant(fa) && config_.subdominant(fb))
            out.push_back("edge " + std::to_string(e) + " has two subdominant sides (" +
                          std::to_string(fa) + "," + std::to_string(fb) + ")");
    }
    return out;
}

std::vector<int> StandardGraph::junction_list() const {
    std::vector<int> out;
    for (int v : alive_vertices())
        if (degree(v) >= 3) out.push_back(v);
    return out;
}

int StandardGraph::bounded_face_count() const {
    auto fm = face_map();
    if (!fm) throw std::runtime_error("bounded_face_count: invalid graph");
    int count = 0;
    for (int e : alive_edges()) {
        auto [fa, fb] = edge_flanks(e, *fm);
        if (config_.dominant(fa) && config_.dominant(fb)) count += edges_[e].len;
    }
    for (int r = 0; r < config_.n(); ++r)
        if (config_.dominant(r - 1) && config_.dominant(r)) count += 1;
    return count;
}

std::optional<Structure> StandardGraph::find_structure(int j) const {
    if (!config_.dominant(j)) throw std::invalid_argument("find_structure: j subdominant");
    j = config_.mod(j);
    const int jp1 = config_.mod(j + 1);
    if (config_.dominant(jp1)) {
        Structure s;
        s.kind = StructureKind::I;
        s.label = j;
        s.junction = ray_vertex(jp1);
        return s;
    }
    const int jp2 = config_.mod(j + 2);
    int p = ray_vertex(jp1);
    int q = ray_vertex(jp2);
    if (p != q) return std::nullopt; // faces j and j_+ never meet
    int w = p;
    if (degree(w) == 3) {
        // meet and separation differ: the third item is the stem
        int stem = -1;
        for (const Item& it : items(w))
            if (it.kind == Item::Kind::Edge) stem = it.index;
        if (stem < 0) throw std::logic_error("degree-3 junction with two rays lacks a stem edge");
        Structure s;
        s.kind = StructureKind::Y;
        s.label = j;
        s.y_junction = w;
        s.stem_edge = stem;
        s.junction = edge_other(stem, w);
        return s;
    }
    Structure s;
    s.kind = StructureKind::V;
    s.label = j;
    s.junction = w;
    return s;
}

std::vector<Structure> StandardGraph::all_structures() const {
    std::vector<Structure> out;
    for (int j : config_.dominant_indices())
        if (auto s = find_structure(j)) out.push_back(*s);
    return out;
}

bool StandardGraph::is_ivy() const {
    auto junctions = junction_list();
    std::vector<bool> is_y(raw_vertex_count(), false);
    for (const Structure& s : all_structures())
        if (s.kind == StructureKind::Y) is_y[s.y_junction] = true;
    int non_y = 0;
    for (int v : junctions)
        if (!is_y[v]) ++non_y;
    return non_y <= 1;
}

long long StandardGraph::tree_distance(int a, int b) const {
    if (a == b) return 0;
    // DFS over the tree accumulating chain lengths
    std::vector<long long> dist(raw_vertex_count(), -1);
    std::vector<int> stack{a};
    dist[a] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Item& it : items(v)) {
            if (it.kind != Item::Kind::Edge) continue;
            int w = edge_other(it.index, v);
            if (dist[w] < 0) {
                dist[w] = dist[v] + edges_[it.index].len;
                stack.push_back(w);
            }
        }
    }
    if (dist[b] < 0) throw std::logic_error("tree_distance: disconnected");
    return dist[b];
}

long long StandardGraph::u_metric(int u0) const {
    if (!vertex_alive(u0)) throw std::invalid_argument("u_metric: u0 is not a vertex");
    long long total = 0;
    for (int v : alive_vertices())
        total += (long long)(degree(v) - 2) * tree_distance(v, u0);
    return total;
}

int StandardGraph::max_chain_len() const {
    int m = 0;
    for (int e : alive_edges()) m = std::max(m, edges_[e].len);
    return m;
}

std::string StandardGraph::canonical() const {
    // Root at the junction carrying ray 0; rotate the root to start at ray 0
    // and every child to start at its parent edge. Rays are pinned to sectors,
    // so this is a complete isotopy invariant.
    int root = ray_vertex(0);
    if (root < 0) throw std::runtime_error("canonical: ray 0 missing");
    std::vector<int> id(raw_vertex_count(), -1);
    int next_id = 0;
    std::ostringstream os;
    os << "g{n=" << config_.n() << ";sub=";
    bool first = true;
    for (int s : config_.subdominant_indices()) {
        if (!first) os << ",";
        os << s;
        first = false;
    }
    os << ";";
    std::function<void(int, int)> visit = [&](int v, int start_pos) {
        id[v] = next_id++;
        const auto& its = items(v);
        const int d = (int)its.size();
        os << "v" << id[v] << "(";
        for (int k = 0; k < d; ++k) {
            const Item& it = its[(start_pos + k) % d];
            if (k) os << " ";
            if (it.kind == Item::Kind::Ray) {
                os << "r" << it.index;
            } else {
                const EdgeRec& e = edges_[it.index];
                int w = edge_other(it.index, v);
                if (id[w] < 0) {
                    os << "c" << e.len; // child link; child serialized later in visit order
                } else {
                    os << "p" << e.len; // back link to parent
                }
            }
        }
        os << ")";
        // recurse in the rotated order so numbering is deterministic
        for (int k = 0; k < d; ++k) {
            const Item& it = its[(start_pos + k) % d];
            if (it.kind != Item::Kind::Edge) continue;
            int w = edge_other(it.index, v);
            if (id[w] < 0) visit(w, item_pos(w, Item::edge(it.index)));
        }
    };
    visit(root, item_pos(root, Item::ray(0)));
    os << "}";
    return os.str();
}

} // namespace smg
