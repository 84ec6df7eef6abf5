#include <doctest.h>

#include <stdexcept>

#include "config.hpp"

using namespace smg;

TEST_CASE("sector config creation enforces the invariants") {
    std::string err;
    CHECK(SectorConfig::create(6, {0, 3}, &err).has_value());
    CHECK(SectorConfig::create(5, {0, 2}, &err).has_value());
    CHECK(SectorConfig::create(6, {0, 2, 4}, &err).has_value());
    CHECK(SectorConfig::create(6, {}, &err).has_value());

    CHECK_FALSE(SectorConfig::create(4, {0, 2}, &err).has_value()); // n too small
    CHECK_FALSE(SectorConfig::create(6, {0, 1}, &err).has_value()); // adjacent
    CHECK_FALSE(SectorConfig::create(6, {5, 0}, &err).has_value()); // adjacent mod n
}

TEST_CASE("successor skips subdominant slots") {
    auto c = *SectorConfig::create(6, {0, 3});
    CHECK(c.successor(1) == 2);
    CHECK(c.successor(2) == 4); // skips the subdominant 3
    CHECK(c.successor(4) == 5);
    CHECK(c.successor(5) == 1); // skips the subdominant 0, wrapping
    CHECK(c.predecessor(1) == 5);
    CHECK(c.predecessor(4) == 2);
    CHECK_THROWS_AS(c.successor(0), std::invalid_argument);
}

TEST_CASE("alternating and adjacency predicates") {
    CHECK(SectorConfig::create(6, {0, 2, 4})->alternating());
    CHECK_FALSE(SectorConfig::create(6, {0, 3})->alternating());
    CHECK_FALSE(SectorConfig::create(6, {0, 2, 4})->has_adjacent_dominant_pair());
    CHECK(SectorConfig::create(6, {0, 3})->has_adjacent_dominant_pair());
    CHECK(SectorConfig::create(5, {0, 2})->has_adjacent_dominant_pair());
}

TEST_CASE("unchecked configs report violations as data") {
    auto c = SectorConfig::unchecked(6, {0, 1});
    auto v = c.violations();
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("adjacent subdominant") != std::string::npos);
}
