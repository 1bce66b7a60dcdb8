#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "sig/circular_arc_graph.hpp"
#include "sig/oracle.hpp"
#include "sig/random.hpp"

namespace {

using V = std::vector<sig::Vertex>;
using sig::Endpoint;

TEST(CircularArcGraph, SevenArcExample) {
    const auto arcs = fixtures::seven_arcs();
    const sig::CircularArcGraph g(arcs);
    EXPECT_EQ(g.size(), 7u);
    EXPECT_EQ(g.normal_count(), 5u);
    EXPECT_EQ(g.reversed_count(), 2u);

    std::vector<std::uint64_t> r, r1, r2;
    for (sig::Vertex v = 1; v <= 7; ++v) r.push_back(g.right(v));
    for (std::size_t i = 1; i <= 5; ++i) r1.push_back(g.normal_right(i));
    for (std::size_t j = 1; j <= 2; ++j) r2.push_back(g.reversed_right(j));
    EXPECT_EQ(r, (std::vector<std::uint64_t>{3, 7, 8, 2, 14, 12, 10}));
    EXPECT_EQ(r1, (std::vector<std::uint64_t>{3, 7, 8, 14, 12}));
    EXPECT_EQ(r2, (std::vector<std::uint64_t>{2, 10}));

    V reversed;
    for (sig::Vertex v = 1; v <= 7; ++v)
        if (g.reversed(v)) reversed.push_back(v);
    EXPECT_EQ(reversed, (V{4, 7}));

    std::vector<int> sp;
    for (std::size_t i = 1; i <= 14; ++i) sp.push_back(static_cast<int>(g.endpoint_at(i)));
    EXPECT_EQ(sp, (std::vector<int>{0, 3, 1, 0, 0, 2, 1, 1, 0, 3, 0, 1, 2, 1}));
    EXPECT_EQ(g.endpoint_bits().to_string(), "01100011010101");

    const std::vector<std::uint64_t> y1 = {1, 2, 3, 5, 4}, y2 = {1, 2};
    for (std::size_t x = 1; x <= 5; ++x) EXPECT_EQ(g.normal_grid().y(x), y1[x - 1]);
    for (std::size_t x = 1; x <= 2; ++x) EXPECT_EQ(g.reversed_grid().y(x), y2[x - 1]);

    EXPECT_EQ(g.neighborhood(7), (V{1, 2, 3, 4, 5}));
    EXPECT_EQ(g.degree(7), 5u);
    EXPECT_EQ(g.neighborhood(6), (V{4, 5}));
    EXPECT_EQ(g.degree(4), 6u);
    EXPECT_TRUE(g.adjacent(4, 7));
    EXPECT_FALSE(g.adjacent(6, 7));
    EXPECT_FALSE(g.adjacent(3, 3));
    EXPECT_EQ(g.spath(1, 6), (V{1, 4, 6}));
    EXPECT_EQ(g.spath(2, 2), (V{2}));
    EXPECT_EQ(g.realization(), arcs);
}

TEST(CircularArcGraph, TrivialInstances) {
    const sig::CircularArcGraph one(sig::ArcRealization({{1, 2}}));
    EXPECT_EQ(one.normal_count(), 1u);
    EXPECT_EQ(one.degree(1), 0u);
    EXPECT_TRUE(one.neighborhood(1).empty());
    EXPECT_EQ(one.endpoint_at(1), Endpoint::normal_left);
    EXPECT_EQ(one.endpoint_at(2), Endpoint::normal_right);

    const sig::CircularArcGraph apart(sig::ArcRealization({{1, 2}, {3, 4}}));
    EXPECT_FALSE(apart.spath(1, 2).has_value());
    EXPECT_FALSE(apart.spath(2, 1).has_value());
    EXPECT_THROW(apart.degree(3), sig::range_error);
    EXPECT_THROW(apart.spath(0, 1), sig::range_error);
}

void expect_matches_oracle(const sig::ArcRealization& arcs, sig::CircularArcGraph::Options opt) {
    const sig::CircularArcGraph g(arcs, opt);
    const auto o = sig::oracle::Graph::from_arcs(arcs);
    ASSERT_EQ(g.realization(), arcs);
    const std::size_t n = arcs.size();
    for (sig::Vertex u = 1; u <= n; ++u) {
        const auto nb = g.neighborhood(u);
        ASSERT_EQ(nb, o.neighborhood(u)) << "u=" << u;
        ASSERT_EQ(g.degree(u), nb.size()) << "u=" << u;
        const auto dist = o.distances(u);
        for (sig::Vertex v = 1; v <= n; ++v) {
            ASSERT_EQ(g.adjacent(u, v), o.adjacent(u, v));
            if (g.reversed(u) && g.reversed(v) && u != v) {
                ASSERT_TRUE(g.adjacent(u, v));
            }
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
    }
}

TEST(CircularArcGraph, MatchesOracleOnRandomArcs) {
    std::mt19937_64 rng(31);
    for (std::size_t n : {1, 2, 3, 10, 50, 200}) expect_matches_oracle(sig::random::arcs(n, rng), {});
    for (int t = 0; t < 60; ++t) expect_matches_oracle(sig::random::arcs(1 + rng() % 40, rng), {.block = 1 + rng() % 6});
}

TEST(CircularArcGraph, MatchesOracleOnSparseArcs) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 60; ++t) {
        const double len = 0.05 + 0.05 * static_cast<double>(rng() % 6);
        expect_matches_oracle(sig::random::short_arcs(2 + rng() % 60, len, rng), {.block = 4});
    }
    expect_matches_oracle(sig::random::short_arcs(200, 0.02, rng), {});
}

TEST(CircularArcGraph, DegreeTable) {
    std::mt19937_64 rng(33);
    const auto arcs = sig::random::arcs(150, rng);
    const sig::CircularArcGraph plain(arcs), table(arcs, {.degree_table = true});
    EXPECT_FALSE(plain.has_degree_table());
    EXPECT_TRUE(table.has_degree_table());
    for (sig::Vertex v = 1; v <= 150; ++v) EXPECT_EQ(table.degree(v), plain.degree(v));
    EXPECT_GT(table.space().get("degree_table"), 0u);
    EXPECT_GT(table.space_bits(), plain.space_bits());
}

TEST(CircularArcGraph, SpaceNearNLogN) {
    std::mt19937_64 rng(34);
    const std::size_t n = 50000;
    const sig::CircularArcGraph g(sig::random::arcs(n, rng));
    const auto rep = g.space();
    EXPECT_EQ(rep.total(), g.space_bits());
    EXPECT_EQ(rep.get("R1") > 0, g.normal_count() > 0);
    const double nlogn = static_cast<double>(n) * std::ceil(std::log2(static_cast<double>(n)));
    EXPECT_LE(static_cast<double>(g.space_bits()), 1.6 * nlogn);
}

TEST(CircularArcGraph, SerializationRoundTrip) {
    std::mt19937_64 rng(35);
    for (bool table : {false, true}) {
        const auto arcs = sig::random::arcs(400, rng);
        const sig::CircularArcGraph g(arcs, {.degree_table = table});
        const auto b = fixtures::bytes(g);
        EXPECT_EQ(b.substr(0, 4), "SCAG");
        const auto h = fixtures::reload<sig::CircularArcGraph>(b);
        EXPECT_EQ(fixtures::bytes(h), b);
        EXPECT_EQ(h.realization(), arcs);
        EXPECT_EQ(h.has_degree_table(), table);
        EXPECT_THROW(fixtures::reload<sig::CircularArcGraph>(b.substr(0, b.size() - 3)), sig::format_error);
    }
}

}  // namespace
