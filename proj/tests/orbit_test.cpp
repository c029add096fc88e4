#include "braidrep/orbit.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/generators.hpp"

namespace braidrep {
namespace {

TEST(Orbit, SmallBinaryOrbit) {
    OrbitIndex orbit = orbit_generate({1, 1, 0});
    ASSERT_EQ(orbit.size(), 3u);
    EXPECT_EQ(orbit.basis[0], (ValueTuple{0, 1, 1}));
    EXPECT_EQ(orbit.basis[1], (ValueTuple{1, 0, 1}));
    EXPECT_EQ(orbit.basis[2], (ValueTuple{1, 1, 0}));
    for (std::size_t i = 0; i < orbit.size(); ++i) EXPECT_EQ(orbit.rank(orbit.basis[i]), i);
}

TEST(Orbit, AllDistinctGivesFactorial) {
    OrbitIndex orbit = orbit_generate({3, 1, 2});
    EXPECT_EQ(orbit.size(), 6u);
    EXPECT_EQ(orbit_cardinality({2, 1, 0}), 6u);
}

TEST(Orbit, LexBasisOrderN5M3) {
    OrbitIndex orbit = orbit_generate({0, 0, 1, 1, 1});
    ASSERT_EQ(orbit.size(), 10u);
    EXPECT_EQ(orbit.basis.front(), (ValueTuple{0, 0, 1, 1, 1}));
    EXPECT_EQ(orbit.basis.back(), (ValueTuple{1, 1, 1, 0, 0}));
}

TEST(Orbit, Cardinality) {
    EXPECT_EQ(orbit_cardinality({1, 0, 0, 0, 0}), 5u);
    EXPECT_EQ(orbit_cardinality({1, 1, 1, 0, 0}), 10u);
    EXPECT_EQ(orbit_cardinality({0, 0, 0}), 1u);
}

TEST(Orbit, ErrorsAndDegenerateSeeds) {
    EXPECT_THROW(orbit_generate({7}), TupleTooShort);
    EXPECT_THROW(orbit_cardinality({1}), TupleTooShort);
    OrbitIndex trivial = orbit_generate({2, 2, 2});
    EXPECT_EQ(trivial.size(), 1u);
}

TEST(Sigma, SwapsAdjacentEntries) {
    EXPECT_EQ(sigma_k({0, 1, 0, 1, 1}, 1), (ValueTuple{1, 0, 0, 1, 1}));
    EXPECT_EQ(sigma_k({1, 1, 0}, 2), (ValueTuple{1, 0, 1}));
    ValueTuple fixed{1, 1, 0};
    EXPECT_EQ(sigma_k(fixed, 1), fixed);
    EXPECT_THROW(sigma_k(fixed, 0), IndexOutOfRange);
    EXPECT_THROW(sigma_k(fixed, 3), IndexOutOfRange);
}

TEST(Sigma, Involution) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        ValueTuple x = testing::random_seed(rng, 6, 3);
        for (int k = 1; k <= 5; ++k) EXPECT_EQ(sigma_k(sigma_k(x, k), k), x);
    }
}

TEST(Complement, FlipsBits) {
    EXPECT_EQ(complement_tuple({1, 0, 0, 1, 0, 1}), (ValueTuple{0, 1, 1, 0, 1, 0}));
    EXPECT_EQ(complement_tuple({1, 1, 1, 0, 0}), (ValueTuple{0, 0, 0, 1, 1}));
    ValueTuple x{1, 0, 1};
    EXPECT_EQ(complement_tuple(complement_tuple(x)), x);
    EXPECT_THROW(complement_tuple({2, 0}), NotBinaryTuple);
}

TEST(Orbit, EnumerationMatchesMultinomialUpToN10) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> len(2, 10);
        std::uniform_int_distribution<int> vals(1, 3);
        int n = len(rng);
        ValueTuple seed = testing::random_seed(rng, n, std::min(n, vals(rng)));
        OrbitIndex orbit = orbit_generate(seed);
        EXPECT_EQ(orbit.size(), orbit_cardinality(seed));
        // strict ascending order, no duplicates, same multiset everywhere
        ValueTuple sorted_seed = seed;
        std::sort(sorted_seed.begin(), sorted_seed.end());
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i + 1 < orbit.size()) EXPECT_LT(orbit.basis[i], orbit.basis[i + 1]);
            ValueTuple copy = orbit.basis[i];
            std::sort(copy.begin(), copy.end());
            EXPECT_EQ(copy, sorted_seed);
        }
        // sigma_k preserves orbit membership
        for (const ValueTuple& x : orbit.basis)
            for (int k = 1; k < n; ++k) EXPECT_TRUE(orbit.contains(sigma_k(x, k)));
    }
}

// The combinatorial identity behind the braid relation: the two triple
// compositions agree pointwise, and far transpositions commute. Exhaustive
// over whole orbits for n <= 8.
TEST(Sigma, BraidRelationPointwise) {
    std::size_t cases = 0;
    for (int n = 3; n <= 8; ++n) {
        ValueTuple seed;
        for (int i = 0; i < n; ++i) seed.push_back(i % 3);
        OrbitIndex orbit = orbit_generate(seed);
        for (const ValueTuple& x : orbit.basis) {
            for (int k = 1; k + 1 <= n - 1; ++k) {
                EXPECT_EQ(sigma_k(sigma_k(sigma_k(x, k), k + 1), k),
                          sigma_k(sigma_k(sigma_k(x, k + 1), k), k + 1));
                ++cases;
            }
            for (int k = 1; k <= n - 1; ++k)
                for (int j = k + 2; j <= n - 1; ++j) {
                    EXPECT_EQ(sigma_k(sigma_k(x, j), k), sigma_k(sigma_k(x, k), j));
                    ++cases;
                }
        }
    }
    EXPECT_GE(cases, 1000u);
}

TEST(Tuple, Rendering) {
    EXPECT_EQ(tuple_to_string({0, 1, 1, 0, 1}), "(0,1,1,0,1)");
    EXPECT_EQ(parse_tuple("(0,1,1,0,1)"), (ValueTuple{0, 1, 1, 0, 1}));
    EXPECT_EQ(parse_tuple("1,0,0"), (ValueTuple{1, 0, 0}));
    EXPECT_THROW(parse_tuple("1,,0"), ParseError);
    EXPECT_THROW(parse_tuple("(1,0"), ParseError);
    EXPECT_THROW(parse_tuple("1,-2"), ParseError);
}

}  // namespace
}  // namespace braidrep
