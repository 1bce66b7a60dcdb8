#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <functional>
#include <vector>

#include "sig/bits.hpp"
#include "sig/error.hpp"
#include "sig/int_vector.hpp"
#include "sig/serialize.hpp"

namespace sig {

// Read access to a value sequence, positions 1..N.
template <class F>
concept ValueAccess = requires(const F& f, std::size_t i) {
    { f(i) } -> std::convertible_to<std::uint64_t>;
};

// Range maximum (Better = std::greater<>) or minimum (std::less<>) over a
// sequence that is stored elsewhere. Only positions are kept:
//   - leftmost extremum offset inside every block of c values,
//   - best block of every superblock of kSuperBlocks blocks,
//   - a sparse table over superblocks.
// A query reads at most 2c values plus 2*kSuperBlocks block extrema.
// Ties resolve to the leftmost position.
template <class Better>
class RangeExtremumIndex {
public:
    static constexpr std::size_t default_block = 32;
    static constexpr std::size_t kSuperBlocks = 8;

    RangeExtremumIndex() = default;

    template <ValueAccess Values>
    RangeExtremumIndex(const Values& values, std::size_t n, std::size_t block = default_block) : size_(n), block_(block) {
        if (block_ == 0) throw range_error("block parameter must be positive");
        const std::size_t nblocks = (n + block_ - 1) / block_;
        const std::size_t nsuper = (nblocks + kSuperBlocks - 1) / kSuperBlocks;
        block_offset_ = IntVector(nblocks, bits::width_for(block_ - 1));
        super_best_ = IntVector(nsuper, bits::width_for(kSuperBlocks - 1));
        for (std::size_t b = 0; b < nblocks; ++b) {
            const std::size_t lo = b * block_, hi = std::min(n, lo + block_);
            std::size_t best = lo;
            std::uint64_t bv = values(lo + 1);
            for (std::size_t p = lo + 1; p < hi; ++p) {
                const std::uint64_t v = values(p + 1);
                if (better_(v, bv)) best = p, bv = v;
            }
            block_offset_.set(b, best - lo);
        }
        for (std::size_t s = 0; s < nsuper; ++s) {
            const std::size_t b0 = s * kSuperBlocks, b1 = std::min(nblocks, b0 + kSuperBlocks);
            std::size_t best = b0;
            std::uint64_t bv = values(block_best(best) + 1);
            for (std::size_t b = b0 + 1; b < b1; ++b) {
                const std::uint64_t v = values(block_best(b) + 1);
                if (better_(v, bv)) best = b, bv = v;
            }
            super_best_.set(s, best - b0);
        }
        // table_[k-1][s]: best superblock among s .. s + 2^k - 1
        const unsigned width = bits::width_for(nsuper == 0 ? 0 : nsuper - 1);
        for (std::size_t k = 1; (std::size_t{1} << k) <= nsuper; ++k) {
            const std::size_t len = nsuper - (std::size_t{1} << k) + 1;
            const std::size_t half = std::size_t{1} << (k - 1);
            IntVector level(len, width);
            for (std::size_t s = 0; s < len; ++s) {
                const std::size_t a = table_at(k - 1, s), b = table_at(k - 1, s + half);
                level.set(s, pick(values, a, b));
            }
            table_.push_back(std::move(level));
        }
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t block() const noexcept { return block_; }

    // Leftmost extremal position in [i, j], 1-based inclusive.
    template <ValueAccess Values>
    std::size_t query(const Values& values, std::size_t i, std::size_t j) const {
        if (i == 0 || i > j || j > size_)
            throw range_error("range [" + std::to_string(i) + "," + std::to_string(j) + "] invalid for length " + std::to_string(size_));
        const std::size_t a = i - 1, b = j - 1;
        std::size_t best = a;
        std::uint64_t bv = values(a + 1);
        auto consider = [&](std::size_t p) {
            const std::uint64_t v = values(p + 1);
            if (better_(v, bv)) best = p, bv = v;
        };
        const std::size_t ba = a / block_, bb = b / block_;
        if (ba == bb) {
            for (std::size_t p = a + 1; p <= b; ++p) consider(p);
            return best + 1;
        }
        for (std::size_t p = a + 1; p < (ba + 1) * block_; ++p) consider(p);
        if (ba + 1 < bb) {
            const std::size_t x = ba + 1, y = bb - 1;
            const std::size_t sx = x / kSuperBlocks, sy = y / kSuperBlocks;
            if (sx == sy) {
                for (std::size_t blk = x; blk <= y; ++blk) consider(block_best(blk));
            } else {
                for (std::size_t blk = x; blk < (sx + 1) * kSuperBlocks; ++blk) consider(block_best(blk));
                if (sx + 1 < sy) consider(super_position(sparse_query(values, sx + 1, sy - 1)));
                for (std::size_t blk = sy * kSuperBlocks; blk <= y; ++blk) consider(block_best(blk));
            }
        }
        for (std::size_t p = bb * block_; p <= b; ++p) consider(p);
        return best + 1;
    }

    std::uint64_t space_bits() const noexcept {
        std::uint64_t s = block_offset_.space_bits() + super_best_.space_bits();
        for (const auto& t : table_) s += t.space_bits();
        return s;
    }

    void save(io::Writer& w) const {
        w.header("RMQX");
        w.u64(size_);
        w.u64(block_);
        block_offset_.save(w);
        super_best_.save(w);
        w.u64(table_.size());
        for (const auto& t : table_) t.save(w);
    }

    static RangeExtremumIndex load(io::Reader& r) {
        r.header("RMQX");
        RangeExtremumIndex x;
        x.size_ = r.u64();
        x.block_ = r.u64();
        if (x.block_ == 0) throw format_error("zero RMQ block size");
        x.block_offset_ = IntVector::load(r);
        x.super_best_ = IntVector::load(r);
        const std::size_t nblocks = (x.size_ + x.block_ - 1) / x.block_;
        if (x.block_offset_.size() != nblocks || x.super_best_.size() != (nblocks + kSuperBlocks - 1) / kSuperBlocks)
            throw format_error("RMQ directory does not match declared length");
        const std::uint64_t nt = r.u64();
        if (nt > 64) throw format_error("RMQ sparse table too deep");
        for (std::uint64_t k = 0; k < nt; ++k) x.table_.push_back(IntVector::load(r));
        return x;
    }

    friend bool operator==(const RangeExtremumIndex& a, const RangeExtremumIndex& b) {
        return a.size_ == b.size_ && a.block_ == b.block_ && a.block_offset_ == b.block_offset_ &&
               a.super_best_ == b.super_best_ && a.table_ == b.table_;
    }

private:
    std::size_t block_best(std::size_t blk) const { return blk * block_ + block_offset_[blk]; }

    std::size_t super_position(std::size_t s) const { return block_best(s * kSuperBlocks + super_best_[s]); }

    std::size_t table_at(std::size_t k, std::size_t s) const { return k == 0 ? s : table_[k - 1][s]; }

    // a is left of b; prefer a on ties.
    template <ValueAccess Values>
    std::size_t pick(const Values& values, std::size_t a, std::size_t b) const {
        return better_(values(super_position(b) + 1), values(super_position(a) + 1)) ? b : a;
    }

    template <ValueAccess Values>
    std::size_t sparse_query(const Values& values, std::size_t s, std::size_t t) const {
        const std::size_t len = t - s + 1;
        const auto k = static_cast<std::size_t>(std::bit_width(len) - 1);
        return pick(values, table_at(k, s), table_at(k, t + 1 - (std::size_t{1} << k)));
    }

    [[no_unique_address]] Better better_{};
    std::size_t size_ = 0;
    std::size_t block_ = default_block;
    IntVector block_offset_;
    IntVector super_best_;
    std::vector<IntVector> table_;
};

using RangeMaxIndex = RangeExtremumIndex<std::greater<>>;
using RangeMinIndex = RangeExtremumIndex<std::less<>>;

}  // namespace sig
