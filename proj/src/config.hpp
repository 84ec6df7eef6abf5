#pragma once

#include <optional>
#include <string>
#include <vector>

namespace smg {

// Sector configuration: n Stokes sectors, a subset of them subdominant
// (asymptotic value 0). Subdominant indices must be pairwise non-adjacent
// mod n, which makes the dominant successor j_+ total with skip <= 1.
class SectorConfig {
public:
    static std::optional<SectorConfig> create(int n, const std::vector<int>& subdominant,
                                              std::string* error = nullptr);
    // Builds without invariant checks; used by parsers and validation tests.
    static SectorConfig unchecked(int n, const std::vector<int>& subdominant);

    int n() const { return n_; }
    bool subdominant(int j) const { return sub_[mod(j)]; }
    bool dominant(int j) const { return !sub_[mod(j)]; }
    int subdominant_count() const;
    std::vector<int> subdominant_indices() const;
    std::vector<int> dominant_indices() const;

    // j_+ : next dominant index counterclockwise after j (j itself dominant).
    int successor(int j) const;
    // j_- : previous dominant index.
    int predecessor(int j) const;

    // True iff subdominant sectors alternate with dominant ones (k = n/2).
    bool alternating() const;
    // True iff some pair of cyclically adjacent sectors is dominant.
    bool has_adjacent_dominant_pair() const;

    // Re-checks the construction invariants; returns violation strings.
    std::vector<std::string> violations() const;

    bool operator==(const SectorConfig& o) const { return n_ == o.n_ && sub_ == o.sub_; }
    bool operator!=(const SectorConfig& o) const { return !(*this == o); }

    int mod(int j) const { return ((j % n_) + n_) % n_; }

private:
    SectorConfig(int n, std::vector<bool> sub) : n_(n), sub_(std::move(sub)) {}
    int n_ = 0;
    std::vector<bool> sub_;
};

} // namespace smg
