#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "sig/interval_graph.hpp"
#include "sig/oracle.hpp"
#include "sig/random.hpp"

namespace {

using V = std::vector<sig::Vertex>;

TEST(Oracle, NineIntervals) {
    const auto real = fixtures::nine_intervals();
    const auto g = sig::oracle::Graph::from_intervals(real);
    EXPECT_TRUE(g.adjacent(2, 3));
    EXPECT_FALSE(g.adjacent(2, 9));
    EXPECT_FALSE(g.adjacent(5, 5));
    EXPECT_EQ(g.distance(1, 9), 4u);
    EXPECT_EQ(sig::oracle::mis_size(real), 3u);
    EXPECT_EQ(sig::oracle::mis_size_exhaustive(g), 3u);
    EXPECT_EQ(sig::oracle::clique_size_exhaustive(g), 4u);
    EXPECT_EQ(sig::oracle::max_overlap(real), 4u);
}

TEST(Oracle, SingleVertexAndArcs) {
    const auto one = sig::oracle::Graph::from_intervals(sig::IntervalRealization({{1, 2}}));
    EXPECT_EQ(one.size(), 1u);
    EXPECT_FALSE(one.adjacent(1, 1));
    const auto arcs = sig::oracle::Graph::from_arcs(fixtures::seven_arcs());
    EXPECT_TRUE(arcs.adjacent(4, 7));
    EXPECT_FALSE(arcs.adjacent(6, 7));
    EXPECT_EQ(arcs.neighborhood(6), (V{4, 5}));
    EXPECT_EQ(arcs.degree(4), 6u);
    EXPECT_EQ(arcs.distance(1, 6), 2u);
}

TEST(Oracle, OrderPredicatesRejectBadOrders) {
    // path 1-2-3 plus isolated 4
    const auto g = sig::oracle::Graph::from_intervals(sig::IntervalRealization({{1, 3}, {2, 5}, {4, 6}, {7, 8}}));
    EXPECT_TRUE(sig::oracle::is_dfs_order(g, V{1, 2, 3, 4}));
    EXPECT_TRUE(sig::oracle::is_dfs_order(g, V{4, 3, 2, 1}));
    EXPECT_FALSE(sig::oracle::is_dfs_order(g, V{1, 3, 2, 4}));
    EXPECT_FALSE(sig::oracle::is_dfs_order(g, V{1, 4, 2, 3}));
    EXPECT_TRUE(sig::oracle::is_bfs_order(g, V{2, 1, 3, 4}));
    EXPECT_FALSE(sig::oracle::is_bfs_order(g, V{1, 2, 4, 3}));
    EXPECT_TRUE(sig::oracle::is_peo(g, V{2, 1, 3, 4}));
    EXPECT_FALSE(sig::oracle::is_peo(g, V{1, 3, 2, 4}));
    EXPECT_FALSE(sig::oracle::is_peo(g, V{1, 2, 3}));
    EXPECT_FALSE(sig::oracle::is_proper_coloring(g, std::vector<std::size_t>{1, 1, 2, 1}));
    EXPECT_TRUE(sig::oracle::is_proper_coloring(g, std::vector<std::size_t>{1, 2, 1, 1}));
}

TEST(Oracle, SizeLimits) {
    std::mt19937_64 rng(51);
    const auto g = sig::oracle::Graph::from_intervals(sig::random::intervals(21, rng));
    EXPECT_THROW(sig::oracle::mis_size_exhaustive(g), sig::range_error);
    EXPECT_THROW(sig::oracle::clique_size_exhaustive(g), sig::range_error);
    EXPECT_THROW(sig::oracle::mis_size(sig::random::intervals(1001, rng)), sig::range_error);
}

TEST(Oracle, RebuiltFromDecodedIntervals) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 10; ++t) {
        const auto real = sig::random::intervals(1 + rng() % 100, rng);
        const sig::SuccinctIntervalGraph s(real);
        EXPECT_EQ(sig::oracle::Graph::from_intervals(s.realization()), sig::oracle::Graph::from_intervals(real));
    }
}

TEST(Oracle, DpAgreesWithExhaustive) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        const auto real = sig::random::intervals(1 + rng() % 16, rng);
        EXPECT_EQ(sig::oracle::mis_size(real), sig::oracle::mis_size_exhaustive(sig::oracle::Graph::from_intervals(real)));
    }
}

}  // namespace
