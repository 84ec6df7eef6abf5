#pragma once

#include "actions.hpp"
#include "standard_graph.hpp"

namespace smg {

// Every contraction routine returns the certifying braid word together with
// the resulting graph; replaying the word on the input reproduces the result
// exactly. Growth statistics of the intermediate graphs are recorded because
// no a-priori bound on them is known.
struct ContractionResult {
    BraidWord word;
    StandardGraph graph;
    int steps = 0;
    int max_junctions = 0;
    int max_chain_len = 0;

    ContractionResult(StandardGraph g) : graph(std::move(g)) {}
};

// Reduces to ivy form; the u0-metric against the junction carrying ray 0
// strictly decreases at every step.
ContractionResult to_ivy(const StandardGraph& g);

// u0 carries structures at the adjacent dominant labels (j_-, j) of kinds
// {Y, V} in either arrangement; the result has the kinds swapped.
ContractionResult exchange_YV(const StandardGraph& g, int u0, int j);

// u0 carries an I- and a Y-structure at (j_-, j); the Y becomes a V and its
// Y-junction disappears.
ContractionResult y_to_v_with_I(const StandardGraph& g, int u0, int j);

// u0 carries two Y-structures at (j_-, j); the one at j_- becomes a V and the
// stems merge, dropping one junction.
ContractionResult merge_YY(const StandardGraph& g, int u0, int j);

// Requires two adjacent dominant faces; contracts to the unique
// one-junction graph (the star).
ContractionResult to_single_junction(const StandardGraph& g);

// Requires no two adjacent dominant faces; contracts to ivy form with at
// most one Y-structure, parked at the smallest dominant label.
ContractionResult to_one_y(const StandardGraph& g);

} // namespace smg
