#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "loops.hpp"

using namespace smg;
using namespace fixtures;

namespace {
LoopWord W(const char* s) { return LoopWord::parse(s); }
} // namespace

TEST_CASE("loop words reduce freely") {
    CHECK(W("abBA").empty());
    CHECK(W("abBc") == W("ac"));
    CHECK(W("aA") == W("1"));
    CHECK(W("abc").inverse() == W("CBA"));
    CHECK(W("ab").concat(W("BA")).empty());
    CHECK(W("b").conjugated_by(W("a")) == W("abA"));
    CHECK(W("abcBA").erase_generator(1) == W("acA"));
}

TEST_CASE("conjugacy via cyclic reduction") {
    CHECK(W("ab").conjugate_to(W("ba")));
    CHECK(W("Aba").conjugate_to(W("b")));
    CHECK_FALSE(W("ab").conjugate_to(W("ab").inverse()));
    CHECK(W("1").conjugate_to(W("aA")));
}

TEST_CASE("initial system and display form") {
    auto sys = initial_system(cfg(6, {0, 3}));
    CHECK(sys.entries.size() == 4);
    CHECK(sys.str() == "(b, c, e, f)");
}

TEST_CASE("basic action formulas") {
    auto all = cfg(6, {});
    auto sys = initial_system(all);
    auto after = b_action(sys, 1, +1);
    CHECK(after.entries.at(1) == W("bcB")); // gamma_1 gamma_2 gamma_1^-1
    CHECK(after.entries.at(2) == W("b"));
    CHECK(after.entries.at(0) == W("a"));

    // subdominant skipping: j_+ of 1 is 3 in (6,{0,2})
    auto skip = initial_system(cfg(6, {0, 2}));
    auto acted = b_action(skip, 1, +1);
    CHECK(acted.entries.at(1) == W("bdB"));
    CHECK(acted.entries.at(3) == W("b"));

    CHECK_THROWS_AS(b_action(sys, 6, +1), std::invalid_argument);
}

TEST_CASE("b_action inverse pairs and empty word") {
    auto sys = initial_system(cfg(6, {0, 3}));
    CHECK(word_action(sys, {}) == sys);
    for (int j : {1, 2, 4, 5}) {
        CHECK(b_action(b_action(sys, j, +1), j, -1) == sys);
        CHECK(b_action(b_action(sys, j, -1), j, +1) == sys);
    }
    CHECK(word_action(sys, {{1, +2}, {1, -2}}) == sys);
}

TEST_CASE("the displayed three-letter computation comes out verbatim") {
    auto sys = initial_system(cfg(6, {}));
    auto got = word_action(sys, {{3, -1}, {2, +1}, {3, +1}});
    CHECK(got.entries.at(0) == W("a"));
    CHECK(got.entries.at(1) == W("b"));
    CHECK(got.entries.at(2) == W("ceC"));
    CHECK(got.entries.at(3) == W("cEdeC"));
    CHECK(got.entries.at(4) == W("c"));
    CHECK(got.entries.at(5) == W("f"));
    CHECK(got.str() == "(a, b, ceC, cEdeC, c, f)");
}

TEST_CASE("the wrapped three-letter computation") {
    auto sys = initial_system(cfg(6, {}));
    auto got = word_action(sys, {{0, -1}, {5, +1}, {0, +1}});
    CHECK(got.entries.at(0) == W("fBabF"));
    CHECK(got.entries.at(1) == W("f"));
    CHECK(got.entries.at(2) == W("c"));
    CHECK(got.entries.at(3) == W("d"));
    CHECK(got.entries.at(4) == W("e"));
    CHECK(got.entries.at(5) == W("fbF"));
}

TEST_CASE("braid relations hold on the full system") {
    auto sys = initial_system(cfg(6, {}));
    for (int j = 0; j < 6; ++j) {
        int jm = (j + 5) % 6;
        auto lhs = word_action(sys, {{j, -1}, {jm, +1}, {j, +1}});
        auto rhs = word_action(sys, {{jm, +1}, {j, +1}, {jm, -1}});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("projection deletes subdominant loops and erases their letters") {
    auto sys = initial_system(cfg(6, {}));
    auto proj = project(sys, {0, 3});
    CHECK(proj.entries.size() == 4);
    CHECK(proj.str() == "(b, c, e, f)");

    // projection after an action erases the deleted generators from words
    auto acted = word_action(sys, {{0, -1}, {5, +1}, {0, +1}});
    auto projected = project(acted, {0, 3});
    CHECK(projected.entries.at(5) == W("fbF"));
    CHECK(projected.entries.at(1) == W("f"));
}

TEST_CASE("projection commutes with inverse pairs") {
    auto sys = initial_system(cfg(6, {}));
    auto noop = word_action(sys, {{2, -1}, {2, +1}});
    CHECK(project(noop, {0, 3}) == project(sys, {0, 3}));
}

TEST_CASE("commuting diagrams") {
    for (int j : {1, 2, 4, 5}) CHECK(verify_commutation(6, {0, 3}, j));
    for (int j : {1, 3, 5}) CHECK(verify_commutation(6, {0, 2, 4}, j));
    for (int j = 0; j < 6; ++j) CHECK(verify_commutation(6, {}, j));
    for (int j : {1, 3, 4}) CHECK(verify_commutation(5, {0, 2}, j));
}

TEST_CASE("boundary product is conjugation invariant") {
    auto sys = initial_system(cfg(6, {}));
    LoopWord base = boundary_product(sys);
    std::mt19937 rng(12345);
    LoopSystem cur = sys;
    for (int step = 0; step < 200; ++step) {
        int j = (int)(rng() % 6);
        int sign = (rng() % 2) ? +1 : -1;
        cur = b_action(cur, j, sign);
        for (auto& [idx, w] : cur.entries) {
            // all stored words freely reduced: re-reducing is a no-op
            CHECK(LoopWord::parse(w.str()) == w);
        }
        CHECK(boundary_product(cur).conjugate_to(base));
    }
    // non-wrapping generators leave the product exactly equal
    auto once = b_action(sys, 2, +1);
    CHECK(boundary_product(once) == base);
}
