#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sig/bits.hpp"
#include "sig/error.hpp"
#include "sig/serialize.hpp"

namespace sig {

// Static bit sequence b_1..b_N with constant-time rank and sampled select.
//
// Positions are 1-based. rank(b, i) counts b in b_1..b_i for 0 <= i <= N;
// select(b, j) is the position of the j-th b.
//
// Directory: absolute counts per 4096-bit superblock, 16-bit relative counts
// per 256-bit block, and the superblock of every 4096-th occurrence of each
// bit value as a select hint.
class BitVector {
public:
    static constexpr std::size_t block_bits = 256;
    static constexpr std::size_t super_bits = 4096;
    static constexpr std::size_t select_sample = 4096;

    BitVector() { build_directory(); }

    explicit BitVector(const std::vector<bool>& bits) : size_(bits.size()) {
        words_.assign(bits::words_for(size_), 0);
        for (std::size_t i = 0; i < size_; ++i)
            if (bits[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
        build_directory();
    }

    BitVector(std::vector<std::uint64_t> words, std::size_t size) : size_(size), words_(std::move(words)) {
        if (words_.size() != bits::words_for(size_)) throw range_error("word count does not match bit length");
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= bits::low_mask(size_ % 64);
        build_directory();
    }

    // "0101..." -> bits; any other character is rejected.
    static BitVector from_string(std::string_view s) {
        std::vector<bool> b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') throw range_error("bit string may contain only 0 and 1");
            b[i] = s[i] == '1';
        }
        return BitVector(b);
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t count_ones() const noexcept { return ones_; }
    std::size_t count(bool b) const noexcept { return b ? ones_ : size_ - ones_; }

    bool access(std::size_t i) const {
        check_position(i);
        return get(i - 1);
    }

    std::size_t rank(bool b, std::size_t i) const {
        if (i > size_) throw range_error("rank position " + std::to_string(i) + " exceeds length " + std::to_string(size_));
        const std::size_t r1 = rank1_unchecked(i);
        return b ? r1 : i - r1;
    }

    std::size_t rank0(std::size_t i) const { return rank(false, i); }
    std::size_t rank1(std::size_t i) const { return rank(true, i); }

    std::size_t select(bool b, std::size_t j) const {
        if (j == 0 || j > count(b))
            throw not_found_error("select_" + std::string(b ? "1" : "0") + "(" + std::to_string(j) +
                                  ") beyond " + std::to_string(count(b)) + " occurrences");
        return b ? select_impl<true>(j) : select_impl<false>(j);
    }

    std::size_t select0(std::size_t j) const { return select(false, j); }
    std::size_t select1(std::size_t j) const { return select(true, j); }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    std::uint64_t data_bits() const noexcept { return words_.size() * 64; }
    std::uint64_t directory_bits() const noexcept {
        return super_ranks_.size() * 64 + block_ranks_.size() * 16 + (samples1_.size() + samples0_.size()) * 64;
    }
    std::uint64_t space_bits() const noexcept { return data_bits() + directory_bits(); }

    void save(io::Writer& w) const {
        w.header("BITV");
        w.u64(size_);
        w.words(words_);
    }

    static BitVector load(io::Reader& r) {
        r.header("BITV");
        std::uint64_t n = r.u64();
        if (n > (std::uint64_t{1} << 40)) throw format_error("BitVector too large");
        auto w = r.words(bits::words_for(n));
        if (w.size() != bits::words_for(n)) throw format_error("BitVector payload length mismatch");
        return BitVector(std::move(w), n);
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    bool get(std::size_t k) const noexcept { return (words_[k / 64] >> (k % 64)) & 1u; }

    void check_position(std::size_t i) const {
        if (i == 0 || i > size_) throw range_error("position " + std::to_string(i) + " outside [1," + std::to_string(size_) + "]");
    }

    std::size_t rank1_unchecked(std::size_t i) const noexcept {
        const std::size_t blk = i / block_bits;
        std::size_t r = super_ranks_[i / super_bits] + block_ranks_[blk];
        std::size_t w = blk * (block_bits / 64);
        const std::size_t last = i / 64;
        for (; w < last; ++w) r += static_cast<std::size_t>(std::popcount(words_[w]));
        if (i % 64) r += static_cast<std::size_t>(std::popcount(words_[last] & bits::low_mask(i % 64)));
        return r;
    }

    template <bool One>
    std::uint64_t word_as(std::size_t w) const noexcept {
        if constexpr (One) return words_[w];
        else {
            std::uint64_t x = ~words_[w];
            if (w + 1 == words_.size() && size_ % 64) x &= bits::low_mask(size_ % 64);
            return x;
        }
    }

    template <bool One>
    std::size_t before_super(std::size_t s) const noexcept {
        return One ? super_ranks_[s] : s * super_bits - super_ranks_[s];
    }

    template <bool One>
    std::size_t before_block(std::size_t blk) const noexcept {
        const std::size_t s = blk * block_bits / super_bits;
        const std::size_t ones = super_ranks_[s] + block_ranks_[blk];
        return One ? ones : blk * block_bits - ones;
    }

    template <bool One>
    std::size_t select_impl(std::size_t j) const noexcept {
        const auto& samples = One ? samples1_ : samples0_;
        const std::size_t nsuper = super_ranks_.size() - 1;
        const std::size_t k = (j - 1) / select_sample;
        std::size_t lo = samples[k];
        std::size_t hi = k + 1 < samples.size() ? samples[k + 1] + 1 : nsuper;
        // last superblock in [lo, hi) with fewer than j occurrences before it
        while (hi - lo > 1) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (before_super<One>(mid) < j) lo = mid;
            else hi = mid;
        }
        const std::size_t blocks_per_super = super_bits / block_bits;
        const std::size_t nblocks = block_ranks_.size() - 1;
        std::size_t blk = lo * blocks_per_super;
        const std::size_t blk_end = std::min(nblocks, blk + blocks_per_super);
        while (blk + 1 < blk_end && before_block<One>(blk + 1) < j) ++blk;
        std::size_t remaining = j - before_block<One>(blk);
        std::size_t w = blk * (block_bits / 64);
        for (;;) {
            const std::uint64_t x = word_as<One>(w);
            const auto c = static_cast<std::size_t>(std::popcount(x));
            if (remaining <= c) return w * 64 + bits::select_in_word(x, static_cast<unsigned>(remaining - 1)) + 1;
            remaining -= c;
            ++w;
        }
    }

    void build_directory() {
        const std::size_t words_per_block = block_bits / 64;
        const std::size_t blocks_per_super = super_bits / block_bits;
        const std::size_t nblocks = size_ / block_bits + 1;
        const std::size_t nsuper = size_ / super_bits + 1;
        super_ranks_.assign(nsuper + 1, 0);
        block_ranks_.assign(nblocks + 1, 0);
        samples1_.clear();
        samples0_.clear();
        std::size_t ones = 0;
        std::size_t zeros = 0;
        for (std::size_t blk = 0; blk <= nblocks; ++blk) {
            const std::size_t s = blk / blocks_per_super;
            if (blk % blocks_per_super == 0) super_ranks_[s] = ones;
            block_ranks_[blk] = static_cast<std::uint16_t>(ones - super_ranks_[s]);
            for (std::size_t w = blk * words_per_block; w < (blk + 1) * words_per_block && w < words_.size(); ++w) {
                const std::size_t valid = std::min<std::size_t>(64, size_ - w * 64);
                const auto c1 = static_cast<std::size_t>(std::popcount(words_[w]));
                const std::size_t c0 = valid - c1;
                while (samples1_.size() * select_sample < ones + c1) samples1_.push_back(s);
                while (samples0_.size() * select_sample < zeros + c0) samples0_.push_back(s);
                ones += c1;
                zeros += c0;
            }
        }
        for (std::size_t s = nblocks / blocks_per_super + 1; s <= nsuper; ++s) super_ranks_[s] = ones;
        ones_ = ones;
    }

    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_ranks_;
    std::vector<std::uint16_t> block_ranks_;
    std::vector<std::uint64_t> samples1_;
    std::vector<std::uint64_t> samples0_;
};

}  // namespace sig
