#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sig/bit_vector.hpp"

namespace {

// S of the nine-interval example graph (left endpoints are 0s).
constexpr const char* kExampleS = "000011010011001111";

std::size_t scan_rank(const std::string& s, char b, std::size_t i) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < i; ++k) c += s[k] == b;
    return c;
}

std::size_t scan_select(const std::string& s, char b, std::size_t j) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] == b && --j == 0) return k + 1;
    return 0;
}

TEST(BitVector, ExampleRankSelect) {
    auto bv = sig::BitVector::from_string(kExampleS);
    EXPECT_EQ(bv.rank0(6), scan_rank(kExampleS, '0', 6));
    EXPECT_EQ(bv.rank0(6), 4u);
    EXPECT_EQ(bv.select0(5), scan_select(kExampleS, '0', 5));
    EXPECT_EQ(bv.select0(5), 7u);
    EXPECT_EQ(bv.rank1(0), 0u);
}

TEST(BitVector, TrivialCases) {
    auto zeros = sig::BitVector::from_string("00000000");
    EXPECT_EQ(zeros.rank0(8), 8u);
    EXPECT_EQ(sig::BitVector::from_string("01").select1(1), 2u);
    EXPECT_EQ(sig::BitVector::from_string("10").select0(1), 2u);
}

TEST(BitVector, Errors) {
    auto bv = sig::BitVector::from_string("0110");
    EXPECT_THROW(bv.rank1(5), sig::range_error);
    EXPECT_THROW(bv.select1(3), sig::not_found_error);
    EXPECT_THROW(bv.select0(0), sig::not_found_error);
    EXPECT_THROW(bv.access(0), sig::range_error);
    EXPECT_THROW(sig::BitVector::from_string("01x"), sig::range_error);
    sig::BitVector empty;
    EXPECT_EQ(empty.rank1(0), 0u);
    EXPECT_THROW(empty.select0(1), sig::not_found_error);
}

void check_against_scan(const std::vector<bool>& bits) {
    sig::BitVector bv(bits);
    std::size_t ones = 0;
    std::vector<std::size_t> pos1, pos0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        ASSERT_EQ(bv.rank1(i), ones) << "i=" << i;
        ASSERT_EQ(bv.rank0(i) + bv.rank1(i), i);
        (bits[i] ? pos1 : pos0).push_back(i + 1);
        ones += bits[i];
    }
    ASSERT_EQ(bv.rank1(bits.size()), ones);
    for (std::size_t j = 0; j < pos1.size(); ++j) {
        ASSERT_EQ(bv.select1(j + 1), pos1[j]);
        ASSERT_EQ(bv.rank1(pos1[j]), j + 1);
    }
    for (std::size_t j = 0; j < pos0.size(); ++j) {
        ASSERT_EQ(bv.select0(j + 1), pos0[j]);
        ASSERT_EQ(bv.rank0(pos0[j]), j + 1);
    }
}

TEST(BitVector, RandomDensitiesMatchScan) {
    std::mt19937_64 rng(7);
    for (double density : {0.0, 0.01, 0.5, 0.93, 1.0}) {
        for (std::size_t n : {1u, 63u, 64u, 65u, 255u, 256u, 4095u, 4096u, 4097u, 20000u}) {
            std::bernoulli_distribution coin(density);
            std::vector<bool> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = coin(rng);
            check_against_scan(bits);
        }
    }
}

TEST(BitVector, InverseLawsAtMillionBits) {
    std::mt19937_64 rng(11);
    const std::size_t n = 1'000'000;
    std::vector<bool> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = (rng() % 3) == 0;
    sig::BitVector bv(bits);
    std::uniform_int_distribution<std::size_t> pos(1, n);
    for (int t = 0; t < 200000; ++t) {
        const std::size_t i = pos(rng);
        const bool b = bits[i - 1];
        ASSERT_EQ(bv.select(b, bv.rank(b, i)), i);
        ASSERT_EQ(bv.rank0(i) + bv.rank1(i), i);
    }
    for (bool b : {false, true}) {
        std::uniform_int_distribution<std::size_t> rk(1, bv.count(b));
        for (int t = 0; t < 50000; ++t) {
            const std::size_t j = rk(rng);
            ASSERT_EQ(bv.rank(b, bv.select(b, j)), j);
        }
    }
}

TEST(BitVector, DirectoryOverheadIsSmall) {
    for (std::size_t n : {1000u, 100000u, 2000000u}) {
        sig::BitVector bv(std::vector<bool>(n, true));
        EXPECT_LE(bv.directory_bits(), n / 4 + 2048) << n;
        EXPECT_EQ(bv.space_bits(), bv.data_bits() + bv.directory_bits());
    }
}

TEST(BitVector, SerializationRoundTrip) {
    std::mt19937_64 rng(3);
    std::vector<bool> bits(9999);
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() & 1u;
    sig::BitVector bv(bits);
    std::stringstream buf;
    sig::io::Writer w(buf);
    bv.save(w);
    sig::io::Reader r(buf);
    auto back = sig::BitVector::load(r);
    EXPECT_EQ(back, bv);
    EXPECT_EQ(back.select1(100), bv.select1(100));
}

}  // namespace
