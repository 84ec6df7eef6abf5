#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace smg {

// An item in the counterclockwise cyclic order around a core vertex:
// either one of the n ray stubs (the infinite branch toward sector
// boundary `index`) or an endpoint of an inter-junction chain.
struct Item {
    enum class Kind { Ray, Edge };
    Kind kind;
    int index; // ray index, or edge id

    static Item ray(int r) { return {Kind::Ray, r}; }
    static Item edge(int e) { return {Kind::Edge, e}; }
    bool operator==(const Item& o) const { return kind == o.kind && index == o.index; }
};

// A chain of `len` tree edges (len-1 intermediate degree-2 vertices)
// between core vertices a and b.
struct EdgeRec {
    int a = -1;
    int b = -1;
    int len = 1;
    bool alive = true;
};

struct VertexRec {
    std::vector<Item> items; // ccw cyclic order
    bool alive = true;
};

enum class StructureKind { I, V, Y };

// The structure hanging at a j-junction. For Y the meet vertex
// (the extra junction inside the structure) and its stem chain are recorded.
struct Structure {
    StructureKind kind;
    int label = -1;      // j
    int junction = -1;   // the j-junction (separation vertex)
    int y_junction = -1; // Y only
    int stem_edge = -1;  // Y only: chain from junction to y_junction
};

const char* to_string(StructureKind k);

// Finite encoding of an infinite standard graph: the core plane tree of
// junctions with chain lengths on inter-junction edges and the n ray stubs
// pinned to their sector positions. Normalized: every live vertex is a
// junction (degree >= 3) except a one-vertex core; ray tails carry no length.
class StandardGraph {
public:
    explicit StandardGraph(SectorConfig config) : config_(std::move(config)) {}

    // One junction carrying all n rays in cyclic order.
    static StandardGraph star(const SectorConfig& config);

    const SectorConfig& config() const { return config_; }

    // --- raw building (parser, enumeration, tests) ---
    int add_vertex();
    int add_edge(int a, int b, int len); // does not touch item lists
    void set_items(int v, std::vector<Item> items);

    // --- surgery (braid actions, contraction) ---
    std::vector<Item>& items_mut(int v) { return verts_[v].items; }
    EdgeRec& edge_mut(int e) { return edges_[e]; }
    void kill_vertex(int v) { verts_[v].alive = false; }
    void kill_edge(int e) { edges_[e].alive = false; }

    // --- accessors ---
    int raw_vertex_count() const { return (int)verts_.size(); }
    int raw_edge_count() const { return (int)edges_.size(); }
    bool vertex_alive(int v) const { return v >= 0 && v < (int)verts_.size() && verts_[v].alive; }
    bool edge_alive(int e) const { return e >= 0 && e < (int)edges_.size() && edges_[e].alive; }
    const std::vector<Item>& items(int v) const { return verts_[v].items; }
    const EdgeRec& edge(int e) const { return edges_[e]; }
    int degree(int v) const { return (int)verts_[v].items.size(); }
    int edge_other(int e, int v) const;
    std::vector<int> alive_vertices() const;
    std::vector<int> alive_edges() const;
    int item_pos(int v, const Item& it) const; // -1 if absent

    // --- queries ---
    // Violation list per the face-labeling lemma; empty means valid.
    std::vector<std::string> validate() const;
    bool valid() const { return validate().empty(); }

    int ray_vertex(int r) const; // -1 if the ray is missing

    // Face index of the gap following each (vertex, item position),
    // from one contour walk around the tree. Fails on invalid graphs.
    struct FaceMap {
        std::vector<std::vector<int>> gap; // gap[v][pos]
        int after(int v, int pos) const { return gap[v][pos]; }
    };
    std::optional<FaceMap> face_map(std::string* error = nullptr) const;

    // The two unbounded faces flanking a chain: (gap after the item at a,
    // gap after the item at b).
    std::pair<int, int> edge_flanks(int e, const FaceMap& fm) const;

    std::vector<int> junction_list() const; // alive vertices of degree >= 3

    // Tree edges separating two dominant faces; chains count their full
    // length, dominant-flanked rays count one each.
    int bounded_face_count() const;

    std::optional<Structure> find_structure(int j) const;
    std::vector<Structure> all_structures() const;
    bool is_ivy() const;

    // Sum over vertices of (deg-2) * (tree distance to u0).
    long long u_metric(int u0) const;

    // Distance in T (chain lengths summed) between live vertices.
    long long tree_distance(int a, int b) const;

    // Deterministic serialization invariant under label-preserving isotopy.
    std::string canonical() const;
    bool equals(const StandardGraph& o) const { return canonical() == o.canonical(); }

    int max_chain_len() const;

private:
    SectorConfig config_;
    std::vector<VertexRec> verts_;
    std::vector<EdgeRec> edges_;
};

} // namespace smg
