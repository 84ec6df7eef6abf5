#pragma once

#include <vector>

#include "cell_graph.hpp"
#include "standard_graph.hpp"

namespace smg {

struct BraidLetter {
    int label = 0;
    int exponent = 0; // one of +1, -1, +2, -2
    bool operator==(const BraidLetter& o) const {
        return label == o.label && exponent == o.exponent;
    }
};
using BraidWord = std::vector<BraidLetter>;

// Basic action A_j (sign +1) or its inverse (sign -1) on a truncated cell
// graph. The labels j and j_+ are permuted; the edges of the slot whose loop
// is a genuinely new curve are rebuilt by the three-step walk, the other
// slot keeps the old arcs. Near the truncation frontier, walks that would
// need vertices beyond the window propagate unknown flags instead of
// guessing.
CellGraph act_basic(const CellGraph& cg, int j, int sign);

// Squared action on a standard graph: the structure at the j-junction moves
// one step along the j-edges (sign +1) or backwards along the j_+-edges
// (sign -1); no j-junction means no change. The result is normalized.
StandardGraph act_squared(const StandardGraph& g, int j, int sign);

// Left-to-right composition; every exponent must be +-2.
StandardGraph apply_word(const StandardGraph& g, const BraidWord& word);

// Oracle route: act_squared recomputed as act_basic twice through a
// truncated cell graph. Throws UnderflowError if the window is too small.
StandardGraph squared_via_basic(const StandardGraph& g, int j, int sign, int window);

// Same, retrying with growing windows starting from `window`.
StandardGraph squared_via_basic_retry(const StandardGraph& g, int j, int sign,
                                      int window = 3, int attempts = 3);

} // namespace smg
