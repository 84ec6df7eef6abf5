#include "config.hpp"

#include <algorithm>
#include <stdexcept>

namespace smg {

SectorConfig SectorConfig::unchecked(int n, const std::vector<int>& subdominant) {
    std::vector<bool> sub(std::max(n, 0), false);
    for (int j : subdominant) {
        if (n > 0) sub[((j % n) + n) % n] = true;
    }
    return SectorConfig(n, std::move(sub));
}

std::optional<SectorConfig> SectorConfig::create(int n, const std::vector<int>& subdominant,
                                                 std::string* error) {
    SectorConfig c = unchecked(n, subdominant);
    auto v = c.violations();
    if (!v.empty()) {
        if (error) *error = v.front();
        return std::nullopt;
    }
    return c;
}

std::vector<std::string> SectorConfig::violations() const {
    std::vector<std::string> out;
    if (n_ < 5) {
        out.push_back("sector count n must be at least 5 (degree d > 2), got n=" +
                      std::to_string(n_));
        return out;
    }
    for (int j = 0; j < n_; ++j) {
        if (sub_[j] && sub_[(j + 1) % n_])
            out.push_back("adjacent subdominant sectors " + std::to_string(j) + " and " +
                          std::to_string((j + 1) % n_));
    }
    return out;
}

int SectorConfig::subdominant_count() const {
    int k = 0;
    for (bool b : sub_) k += b ? 1 : 0;
    return k;
}

std::vector<int> SectorConfig::subdominant_indices() const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (sub_[j]) out.push_back(j);
    return out;
}

std::vector<int> SectorConfig::dominant_indices() const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (!sub_[j]) out.push_back(j);
    return out;
}

int SectorConfig::successor(int j) const {
    if (!dominant(j)) throw std::invalid_argument("successor of subdominant index");
    for (int k = 1; k <= 2; ++k)
        if (dominant(j + k)) return mod(j + k);
    throw std::logic_error("no dominant successor within two steps; config invalid");
}

int SectorConfig::predecessor(int j) const {
    if (!dominant(j)) throw std::invalid_argument("predecessor of subdominant index");
    for (int k = 1; k <= 2; ++k)
        if (dominant(j - k)) return mod(j - k);
    throw std::logic_error("no dominant predecessor within two steps; config invalid");
}

bool SectorConfig::alternating() const {
    if (n_ % 2 != 0 || subdominant_count() != n_ / 2) return false;
    for (int j = 0; j < n_; ++j)
        if (sub_[j] == sub_[(j + 1) % n_]) return false;
    return true;
}

bool SectorConfig::has_adjacent_dominant_pair() const {
    for (int j = 0; j < n_; ++j)
        if (!sub_[j] && !sub_[(j + 1) % n_]) return true;
    return false;
}

} // namespace smg
