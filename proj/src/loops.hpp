#pragma once

#include <map>
#include <string>
#include <vector>

#include "actions.hpp"
#include "config.hpp"

namespace smg {

// Freely reduced word over generators g_0..g_{n-1}. Letters are stored as
// +(g+1) for a generator, -(g+1) for its inverse. Printed as a..z for
// generators, A..Z for inverses.
class LoopWord {
public:
    LoopWord() = default;
    static LoopWord generator(int g) { return LoopWord({g + 1}); }
    static LoopWord parse(const std::string& text);

    LoopWord concat(const LoopWord& o) const;
    LoopWord inverse() const;
    // x y x^-1 reading left to right
    LoopWord conjugated_by(const LoopWord& x) const { return x.concat(*this).concat(x.inverse()); }

    // substitute the identity for a generator, then re-reduce
    LoopWord erase_generator(int g) const;

    bool empty() const { return letters_.empty(); }
    int length() const { return (int)letters_.size(); }
    const std::vector<int>& letters() const { return letters_; }
    std::string str() const;

    // equal after cyclic reduction, i.e. conjugate in the free group
    bool conjugate_to(const LoopWord& o) const;

    bool operator==(const LoopWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const LoopWord& o) const { return !(*this == o); }

private:
    explicit LoopWord(std::vector<int> raw) { append_reduced(raw); }
    void append_reduced(const std::vector<int>& raw);
    std::vector<int> letters_;
};

// The loops gamma_j of the cell decomposition, one per dominant sector.
struct LoopSystem {
    SectorConfig config;
    std::map<int, LoopWord> entries;

    bool operator==(const LoopSystem& o) const {
        return config == o.config && entries == o.entries;
    }
    std::string str() const; // "(a, bcB, ...)" in ascending dominant order
};

// j |-> g_j for every dominant j.
LoopSystem initial_system(const SectorConfig& config);

// The braid generator action on loop tuples: entry j becomes
// gamma_j gamma_j+ gamma_j^-1 and entry j_+ becomes gamma_j (sign +1);
// the displayed inverse formula for sign -1.
LoopSystem b_action(const LoopSystem& sys, int j, int sign);

// Left-to-right composition; exponents +-1 apply once, +-2 twice.
LoopSystem word_action(const LoopSystem& sys, const BraidWord& word);

// Deletes the entries in l and erases their generators from the rest.
LoopSystem project(const LoopSystem& sys, const std::vector<int>& l);

// Checks the commuting diagram for one generator: pi . B_j = A_j . pi when
// j+1 is dominant, and pi . (B_{j+1}^-1 B_j B_{j+1}) = A_j . pi when j+1 is
// subdominant.
bool verify_commutation(int n, const std::vector<int>& l, int j);

// Ordered product of all entries; its conjugacy class is invariant.
LoopWord boundary_product(const LoopSystem& sys);

} // namespace smg
