#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "sig/interval_graph.hpp"
#include "sig/oracle.hpp"
#include "sig/random.hpp"

namespace {

using V = std::vector<sig::Vertex>;

TEST(IntervalGraph, NineIntervalExample) {
    const sig::SuccinctIntervalGraph g(fixtures::nine_intervals());
    EXPECT_EQ(g.size(), 9u);
    EXPECT_EQ(g.endpoint_bits().to_string(), "000011011001001111");
    EXPECT_EQ(g.interval(6), (sig::Endpoints{10, 18}));
    EXPECT_EQ(g.degree(9), 3u);
    EXPECT_EQ(g.degree(1), 3u);
    EXPECT_TRUE(g.adjacent(2, 3));
    EXPECT_FALSE(g.adjacent(2, 9));
    EXPECT_FALSE(g.adjacent(4, 4));
    EXPECT_EQ(g.neighborhood(9), (V{6, 7, 8}));
    EXPECT_EQ(g.neighborhood(6), (V{5, 7, 8, 9}));
    EXPECT_EQ(g.neighborhood(1), (V{2, 3, 4}));
    EXPECT_EQ(g.succ(2), 3u);
    EXPECT_EQ(g.succ(5), 6u);
    EXPECT_EQ(g.spath(1, 9), (V{1, 3, 5, 6, 9}));
    EXPECT_EQ(g.spath(9, 1), (V{9, 6, 5, 3, 1}));
    EXPECT_EQ(g.spath(4, 4), (V{4}));
}

TEST(IntervalGraph, TrivialGraphs) {
    const sig::SuccinctIntervalGraph one(sig::IntervalRealization({{1, 2}}));
    EXPECT_EQ(one.degree(1), 0u);
    EXPECT_TRUE(one.neighborhood(1).empty());
    EXPECT_EQ(one.spath(1, 1), (V{1}));

    const sig::SuccinctIntervalGraph apart(sig::IntervalRealization({{1, 2}, {3, 4}}));
    EXPECT_FALSE(apart.spath(1, 2).has_value());
    EXPECT_FALSE(apart.spath(2, 1).has_value());
    EXPECT_FALSE(apart.succ(1).has_value() && *apart.succ(1) != 1u);
    EXPECT_TRUE(apart.neighborhood(2).empty());
}

TEST(IntervalGraph, RangeErrors) {
    const sig::SuccinctIntervalGraph g(fixtures::nine_intervals());
    EXPECT_THROW(g.degree(0), sig::range_error);
    EXPECT_THROW(g.degree(10), sig::range_error);
    EXPECT_THROW(g.adjacent(1, 10), sig::range_error);
    EXPECT_THROW(g.neighborhood(10), sig::range_error);
    EXPECT_THROW(g.spath(0, 1), sig::range_error);
}

void expect_matches_oracle(const sig::IntervalRealization& real, std::size_t block) {
    const sig::SuccinctIntervalGraph g(real, block);
    const auto o = sig::oracle::Graph::from_intervals(real);
    ASSERT_EQ(g.realization(), real);
    const std::size_t n = real.size();
    for (sig::Vertex u = 1; u <= n; ++u) {
        const auto nb = g.neighborhood(u);
        ASSERT_EQ(nb, o.neighborhood(u)) << "u=" << u;
        ASSERT_EQ(g.degree(u), nb.size());
        const auto dist = o.distances(u);
        for (sig::Vertex v = 1; v <= n; ++v) {
            ASSERT_EQ(g.adjacent(u, v), o.adjacent(u, v));
            const auto p = g.spath(u, v);
            if (dist[v] == sig::oracle::unreachable) {
                ASSERT_FALSE(p.has_value()) << u << "-" << v;
                continue;
            }
            ASSERT_TRUE(p.has_value()) << u << "-" << v;
            ASSERT_EQ(p->size() - 1, dist[v]) << u << "-" << v;
            ASSERT_EQ(p->front(), u);
            ASSERT_EQ(p->back(), v);
            for (std::size_t i = 1; i < p->size(); ++i) ASSERT_TRUE(o.adjacent((*p)[i - 1], (*p)[i]));
        }
        if (const auto s = g.succ(u); s && *s != u) {
            ASSERT_TRUE(o.adjacent(u, *s));
            for (sig::Vertex w : nb)
                if (real[w].l < real[u].r) {
                    ASSERT_LE(real[w].r, real[*s].r);
                }
        }
    }
}

TEST(IntervalGraph, MatchesOracleOnRandomPairings) {
    std::mt19937_64 rng(11);
    for (std::size_t n : {1, 2, 3, 10, 50, 120, 300}) expect_matches_oracle(sig::random::intervals(n, rng), 32);
    for (int t = 0; t < 40; ++t) expect_matches_oracle(sig::random::intervals(1 + rng() % 40, rng), 1 + rng() % 8);
}

TEST(IntervalGraph, MatchesOracleOnSparseInstances) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) expect_matches_oracle(sig::random::short_intervals(5 + rng() % 80, 100.0, 4.0, rng), 4);
    expect_matches_oracle(sig::random::short_intervals(300, 1000.0, 12.0, rng), 32);
}

TEST(IntervalGraph, SpaceBreakdown) {
    std::mt19937_64 rng(13);
    const std::size_t n = 20000;
    const sig::SuccinctIntervalGraph g(sig::random::intervals(n, rng));
    const auto rep = g.space();
    EXPECT_EQ(rep.total(), g.space_bits());
    EXPECT_EQ(rep.get("S"), 2 * n);
    EXPECT_GT(rep.get("r"), 0u);
    EXPECT_GT(rep.get("rmax"), 0u);
    const double logn = std::ceil(std::log2(2.0 * n));
    EXPECT_LE(static_cast<double>(g.space_bits()), n * logn + 4.0 * n + static_cast<double>(rep.get("S.directory")));
}

TEST(IntervalGraph, SerializationRoundTrip) {
    std::mt19937_64 rng(14);
    for (std::size_t n : {1, 9, 500}) {
        const sig::SuccinctIntervalGraph g(sig::random::intervals(n, rng), 16);
        const auto b = fixtures::bytes(g);
        EXPECT_EQ(b.substr(0, 4), "SIGR");
        const auto h = fixtures::reload<sig::SuccinctIntervalGraph>(b);
        EXPECT_EQ(h.realization(), g.realization());
        EXPECT_EQ(fixtures::bytes(h), b);
        for (sig::Vertex v = 1; v <= n; v += 7) EXPECT_EQ(h.neighborhood(v), g.neighborhood(v));
    }
}

TEST(IntervalGraph, LoadRejectsGarbage) {
    const sig::SuccinctIntervalGraph g(fixtures::nine_intervals());
    auto b = fixtures::bytes(g);
    EXPECT_THROW(fixtures::reload<sig::SuccinctIntervalGraph>(b.substr(0, b.size() / 2)), sig::format_error);
    b[0] = 'X';
    EXPECT_THROW(fixtures::reload<sig::SuccinctIntervalGraph>(b), sig::format_error);
}

}  // namespace
