#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "standard_graph.hpp"

namespace smg {

// Finite truncation of the directed labeled graph Gamma. Each vertex carries
// at most one incoming and one outgoing edge per label. Truncation flags mark
// (label, direction) slots whose edge exists beyond the materialized window,
// so later passes can tell "absent" from "cut off".
class CellGraph {
public:
    explicit CellGraph(SectorConfig config)
        : config_(std::move(config)), assignment_(make_identity(config_.n())) {}

    const SectorConfig& config() const { return config_; }
    int n() const { return config_.n(); }

    int vertex_count() const { return (int)out_.size(); }
    int add_vertex();

    // label-indexed adjacency; -1 means no edge
    int out(int v, int label) const { return out_[v][label]; }
    int in(int v, int label) const { return in_[v][label]; }
    void add_edge(int u, int v, int label);
    void clear_label(int label); // drop every edge with this label

    bool unknown_out(int v, int label) const { return unknown_out_[v][label]; }
    bool unknown_in(int v, int label) const { return unknown_in_[v][label]; }
    void set_unknown_out(int v, int label, bool b) { unknown_out_[v][label] = b; }
    void set_unknown_in(int v, int label, bool b) { unknown_in_[v][label] = b; }
    bool has_unknown(int v) const;

    // face assignment: sector index -> asymptotic value index
    const std::vector<int>& face_assignment() const { return assignment_; }
    void set_face_assignment(std::vector<int> a) { assignment_ = std::move(a); }
    void swap_assignment(int j, int jp);
    bool standard_order() const;

    int window() const { return window_; }
    void set_window(int w) { window_ = w; }

    int total_degree(int v) const;

    struct DirectedEdge {
        int from, to, label;
    };
    std::vector<DirectedEdge> edges() const;

    // Invariant checks representable without an embedding: per-label in/out
    // uniqueness is structural; checks even degree, no subdominant labels,
    // and that parallel pairs are antiparallel with distinct labels.
    std::vector<std::string> validate() const;

    bool operator==(const CellGraph& o) const;

private:
    static std::vector<int> make_identity(int n);
    SectorConfig config_;
    int window_ = 0;
    std::vector<int> assignment_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<bool>> unknown_out_, unknown_in_;
};

// Materializes `window` vertices along each ray and emits directed labeled
// edges by the side rule (double edge between two dominant faces, single
// otherwise; direction counterclockwise around the dominant face).
// window >= 1 required.
CellGraph to_cell_graph(const StandardGraph& g, int window);

// Recognizes a truncated standard-order cell graph and returns its normalized
// core encoding. Throws UnderflowError when truncation flags interfere with
// the junction region, ParseError when the graph is not a standard-order
// truncation.
StandardGraph cell_to_standard(const CellGraph& cg);

} // namespace smg
