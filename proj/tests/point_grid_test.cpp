#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sig/point_grid.hpp"

namespace {

// Normal-arc grid of the seven-arc example: (1,1),(2,2),(3,3),(4,5),(5,4).
const std::vector<std::uint64_t> kR1 = {1, 2, 3, 5, 4};

std::size_t brute_count(const std::vector<std::uint64_t>& ys, long x1, long x2, long y1, long y2) {
    std::size_t c = 0;
    for (long x = 1; x <= static_cast<long>(ys.size()); ++x) {
        const long y = static_cast<long>(ys[x - 1]);
        c += x >= x1 && x <= x2 && y >= y1 && y <= y2;
    }
    return c;
}

TEST(PointGrid, ExampleValues) {
    sig::PointGrid r1(kR1);
    EXPECT_EQ(r1.y(4), 5u);
    EXPECT_EQ(r1.count(1, 3, 1, 3), 3u);
    EXPECT_EQ(r1.count(4, 5, 4, 5), 2u);
    EXPECT_EQ(r1.count(3, 2, 1, 5), 0u);
    const std::vector<std::uint64_t> r2 = {1, 2};
    EXPECT_EQ(sig::PointGrid(r2).y(2), 2u);
    std::vector<std::uint64_t> id(9);
    std::iota(id.begin(), id.end(), 1);
    sig::PointGrid g(id);
    for (std::size_t k = 1; k <= 9; ++k) EXPECT_EQ(g.y(k), k);
}

TEST(PointGrid, ClampsAndRejects) {
    sig::PointGrid r1(kR1);
    EXPECT_EQ(r1.count(-4, 100, 0, 100), 5u);
    EXPECT_THROW(r1.y(0), sig::range_error);
    EXPECT_THROW(r1.y(6), sig::range_error);
    const std::vector<std::uint64_t> dup = {1, 1};
    EXPECT_THROW(sig::PointGrid{dup}, sig::realization_error);
    sig::PointGrid empty{std::vector<std::uint64_t>{}};
    EXPECT_EQ(empty.count(1, 5, 1, 5), 0u);
}

TEST(PointGrid, ExhaustiveRectanglesSmall) {
    std::mt19937_64 rng(9);
    for (std::size_t m : {1u, 2u, 7u, 40u}) {
        std::vector<std::uint64_t> ys(m);
        std::iota(ys.begin(), ys.end(), 1);
        std::shuffle(ys.begin(), ys.end(), rng);
        sig::PointGrid g(ys);
        ASSERT_EQ(g.count(1, m, 1, m), m);
        for (long x1 = 1; x1 <= static_cast<long>(m); ++x1)
            for (long x2 = x1; x2 <= static_cast<long>(m); ++x2)
                for (long y1 = 1; y1 <= static_cast<long>(m); ++y1)
                    for (long y2 = y1; y2 <= static_cast<long>(m); ++y2)
                        ASSERT_EQ(g.count(x1, x2, y1, y2), brute_count(ys, x1, x2, y1, y2));
    }
}

TEST(PointGrid, RandomLarger) {
    std::mt19937_64 rng(10);
    const std::size_t m = 500;
    std::vector<std::uint64_t> ys(m);
    std::iota(ys.begin(), ys.end(), 1);
    std::shuffle(ys.begin(), ys.end(), rng);
    sig::PointGrid g(ys);
    for (std::size_t x = 1; x <= m; ++x) ASSERT_EQ(g.y(x), ys[x - 1]);
    for (int t = 0; t < 5000; ++t) {
        long x1 = rng() % m + 1, x2 = rng() % m + 1, y1 = rng() % m + 1, y2 = rng() % m + 1;
        if (x1 > x2) std::swap(x1, x2);
        if (y1 > y2) std::swap(y1, y2);
        const std::size_t a = g.count(x1, x2, y1, y2);
        ASSERT_EQ(a, brute_count(ys, x1, x2, y1, y2));
        // splitting a rectangle along x is additive
        if (x1 < x2) {
            const long mid = x1 + (x2 - x1) / 2;
            ASSERT_EQ(a, g.count(x1, mid, y1, y2) + g.count(mid + 1, x2, y1, y2));
        }
    }
}

}  // namespace
