#include "loops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smg {

void LoopWord::append_reduced(const std::vector<int>& raw) {
    for (int letter : raw) {
        if (!letters_.empty() && letters_.back() == -letter)
            letters_.pop_back();
        else
            letters_.push_back(letter);
    }
}

LoopWord LoopWord::parse(const std::string& text) {
    std::vector<int> raw;
    for (char c : text) {
        if (c == ' ' || c == '1') continue; // "1" denotes the empty word
        if (c >= 'a' && c <= 'z')
            raw.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            raw.push_back(-(c - 'A' + 1));
        else
            throw std::invalid_argument(std::string("loop word: bad character '") + c + "'");
    }
    return LoopWord(raw);
}

LoopWord LoopWord::concat(const LoopWord& o) const {
    LoopWord out = *this;
    out.append_reduced(o.letters_);
    return out;
}

LoopWord LoopWord::inverse() const {
    std::vector<int> raw(letters_.rbegin(), letters_.rend());
    for (int& l : raw) l = -l;
    return LoopWord(raw);
}

LoopWord LoopWord::erase_generator(int g) const {
    std::vector<int> raw;
    for (int l : letters_)
        if (l != g + 1 && l != -(g + 1)) raw.push_back(l);
    return LoopWord(raw);
}

std::string LoopWord::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (int l : letters_) out += (l > 0) ? char('a' + l - 1) : char('A' - l - 1);
    return out;
}

bool LoopWord::conjugate_to(const LoopWord& o) const {
    auto cyclic_reduce = [](std::vector<int> w) {
        while (w.size() >= 2 && w.front() == -w.back()) {
            w.erase(w.begin());
            w.pop_back();
        }
        return w;
    };
    std::vector<int> a = cyclic_reduce(letters_);
    std::vector<int> b = cyclic_reduce(o.letters_);
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t shift = 0; shift < a.size(); ++shift) {
        bool same = true;
        for (size_t i = 0; i < a.size() && same; ++i)
            same = a[(i + shift) % a.size()] == b[i];
        if (same) return true;
    }
    return false;
}

std::string LoopSystem::str() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& [j, w] : entries) {
        if (!first) os << ", ";
        os << w.str();
        first = false;
    }
    os << ")";
    return os.str();
}

LoopSystem initial_system(const SectorConfig& config) {
    LoopSystem sys{config, {}};
    for (int j : config.dominant_indices()) sys.entries[j] = LoopWord::generator(j);
    return sys;
}

LoopSystem b_action(const LoopSystem& sys, int j, int sign) {
    const SectorConfig& cfg = sys.config;
    if (!cfg.dominant(j)) throw std::invalid_argument("b_action: subdominant index");
    j = cfg.mod(j);
    int jp = cfg.successor(j);
    LoopSystem out = sys;
    const LoopWord& gj = sys.entries.at(j);
    const LoopWord& gp = sys.entries.at(jp);
    if (sign > 0) {
        out.entries[j] = gp.conjugated_by(gj); // gamma_j gamma_j+ gamma_j^-1
        out.entries[jp] = gj;
    } else {
        out.entries[j] = gp;
        out.entries[jp] = gj.conjugated_by(gp.inverse()); // gamma_j+^-1 gamma_j gamma_j+
    }
    return out;
}

LoopSystem word_action(const LoopSystem& sys, const BraidWord& word) {
    LoopSystem cur = sys;
    for (const BraidLetter& l : word) {
        int times = std::abs(l.exponent);
        if (times != 1 && times != 2)
            throw std::invalid_argument("word_action: exponent must be one of +-1, +-2");
        for (int t = 0; t < times; ++t) cur = b_action(cur, l.label, l.exponent > 0 ? 1 : -1);
    }
    return cur;
}

LoopSystem project(const LoopSystem& sys, const std::vector<int>& l) {
    std::string err;
    auto cfg = SectorConfig::create(sys.config.n(), l, &err);
    if (!cfg) throw std::invalid_argument("project: invalid subdominant set: " + err);
    LoopSystem out{*cfg, {}};
    for (const auto& [j, w] : sys.entries) {
        if (cfg->subdominant(j)) continue;
        LoopWord word = w;
        for (int s : cfg->subdominant_indices()) word = word.erase_generator(s);
        out.entries[j] = word;
    }
    return out;
}

bool verify_commutation(int n, const std::vector<int>& l, int j) {
    std::string err;
    auto cfg_all = SectorConfig::create(n, {}, &err);
    auto cfg_sub = SectorConfig::create(n, l, &err);
    if (!cfg_all || !cfg_sub) throw std::invalid_argument("verify_commutation: bad config");
    if (!cfg_sub->subdominant_indices().empty() && !cfg_sub->dominant(j))
        throw std::invalid_argument("verify_commutation: j is subdominant");
    LoopSystem full = initial_system(*cfg_all);

    BraidWord w;
    if (cfg_sub->dominant(j + 1)) {
        w = {{j, +1}};
    } else {
        int jn = cfg_sub->mod(j + 1);
        w = {{jn, -1}, {j, +1}, {jn, +1}};
    }
    LoopSystem lhs = project(word_action(full, w), l);
    LoopSystem rhs = b_action(project(full, l), j, +1);
    return lhs == rhs;
}

LoopWord boundary_product(const LoopSystem& sys) {
    LoopWord prod;
    for (const auto& [j, w] : sys.entries) prod = prod.concat(w);
    return prod;
}

} // namespace smg
