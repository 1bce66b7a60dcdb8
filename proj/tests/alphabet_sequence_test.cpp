#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sig/alphabet_sequence.hpp"

namespace {

// Depth-coded endpoint sequence of the nine-interval example.
const std::vector<std::uint64_t> kT = {0, 2, 0, 2, 3, 1, 0, 3, 1, 0, 2, 1, 2, 4, 3, 5, 3, 1};

TEST(AlphabetSequence, ExampleValues) {
    sig::AlphabetSequence t(kT, 6);
    EXPECT_EQ(t.rank(2, 11), 3u);
    EXPECT_EQ(t.select(4, 1), 14u);
    EXPECT_EQ(t.access(16), 5u);
}

TEST(AlphabetSequence, Errors) {
    sig::AlphabetSequence t(kT, 6);
    EXPECT_THROW(t.access(0), sig::range_error);
    EXPECT_THROW(t.access(19), sig::range_error);
    EXPECT_THROW(t.rank(1, 19), sig::range_error);
    EXPECT_THROW(t.select(4, 2), sig::not_found_error);
    EXPECT_EQ(t.rank(9, 18), 0u);
    const std::vector<std::uint64_t> bad = {0, 7};
    EXPECT_THROW(sig::AlphabetSequence(bad, 6), sig::range_error);
}

TEST(AlphabetSequence, RandomMatchesScan) {
    std::mt19937_64 rng(5);
    for (std::uint64_t sigma : {1u, 2u, 3u, 4u, 7u, 64u, 1000u}) {
        const std::size_t n = 3000;
        std::vector<std::uint64_t> s(n);
        for (auto& x : s) x = rng() % sigma;
        sig::AlphabetSequence seq(s, sigma);
        std::vector<std::size_t> counts(sigma, 0);
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_EQ(seq.access(i + 1), s[i]);
            ++counts[s[i]];
            ASSERT_EQ(seq.rank(s[i], i + 1), counts[s[i]]);
            ASSERT_EQ(seq.select(s[i], counts[s[i]]), i + 1);
        }
        std::size_t total = 0;
        for (std::uint64_t a = 0; a < sigma; ++a) total += seq.rank(a, n);
        ASSERT_EQ(total, n);
        for (int t = 0; t < 300; ++t) {
            std::size_t i = rng() % n + 1, j = rng() % n + 1;
            if (i > j) std::swap(i, j);
            const std::uint64_t lo = rng() % sigma, hi = lo + rng() % (sigma - lo);
            std::size_t brute = 0;
            for (std::size_t k = i; k <= j; ++k) brute += s[k - 1] >= lo && s[k - 1] <= hi;
            ASSERT_EQ(seq.count_range(i, j, lo, hi), brute);
        }
    }
}

TEST(AlphabetSequence, SerializationRoundTrip) {
    sig::AlphabetSequence t(kT, 6);
    std::stringstream buf;
    sig::io::Writer w(buf);
    t.save(w);
    sig::io::Reader r(buf);
    EXPECT_EQ(sig::AlphabetSequence::load(r), t);
}

}  // namespace
