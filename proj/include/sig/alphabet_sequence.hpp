#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sig/bit_vector.hpp"
#include "sig/bits.hpp"
#include "sig/error.hpp"
#include "sig/serialize.hpp"

namespace sig {

// Sequence s_1..s_N over {0..sigma-1} stored as a wavelet matrix: one
// BitVector per bit of the symbol code, most significant bit first.
// rank/access cost one BitVector rank per level, select one select per level.
//
// Level 0 holds the top bit of every symbol in original order, which callers
// may use directly as a plain bit sequence (see CircularArcGraph).
class AlphabetSequence {
public:
    AlphabetSequence() = default;

    AlphabetSequence(std::span<const std::uint64_t> symbols, std::uint64_t sigma) : size_(symbols.size()), sigma_(sigma) {
        if (sigma_ == 0) throw range_error("alphabet size must be positive");
        for (auto s : symbols)
            if (s >= sigma_) throw range_error("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(sigma_));
        const unsigned nlevels = bits::width_for(sigma_ - 1);
        std::vector<std::uint64_t> cur(symbols.begin(), symbols.end());
        std::vector<std::uint64_t> next(cur.size());
        levels_.reserve(nlevels);
        zeros_.reserve(nlevels);
        for (unsigned lv = 0; lv < nlevels; ++lv) {
            const unsigned shift = nlevels - 1 - lv;
            std::vector<bool> b(cur.size());
            std::size_t z = 0;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                b[i] = (cur[i] >> shift) & 1u;
                if (!b[i]) ++z;
            }
            // stable partition: zeros first, then ones
            std::size_t zi = 0, oi = z;
            for (std::size_t i = 0; i < cur.size(); ++i) next[b[i] ? oi++ : zi++] = cur[i];
            levels_.emplace_back(b);
            zeros_.push_back(z);
            cur.swap(next);
        }
    }

    std::size_t size() const noexcept { return size_; }
    std::uint64_t sigma() const noexcept { return sigma_; }
    unsigned num_levels() const noexcept { return static_cast<unsigned>(levels_.size()); }
    const BitVector& level(unsigned lv) const { return levels_.at(lv); }

    std::uint64_t access(std::size_t i) const {
        if (i == 0 || i > size_) throw range_error("access position " + std::to_string(i) + " outside [1," + std::to_string(size_) + "]");
        std::size_t p = i - 1;
        std::uint64_t v = 0;
        for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
            const BitVector& b = levels_[lv];
            const bool bit = b.access(p + 1);
            v = (v << 1) | static_cast<std::uint64_t>(bit);
            p = bit ? zeros_[lv] + b.rank1(p) : b.rank0(p);
        }
        return v;
    }

    // s_i and the number of its occurrences in s_1..s_i, in one pass.
    std::pair<std::uint64_t, std::size_t> access_rank(std::size_t i) const {
        if (i == 0 || i > size_) throw range_error("access position " + std::to_string(i) + " outside [1," + std::to_string(size_) + "]");
        std::size_t s = 0, e = i - 1;
        std::uint64_t v = 0;
        for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
            const BitVector& b = levels_[lv];
            const bool bit = b.access(e + 1);
            v = (v << 1) | static_cast<std::uint64_t>(bit);
            if (bit) {
                s = zeros_[lv] + b.rank1(s);
                e = zeros_[lv] + b.rank1(e);
            } else {
                s = b.rank0(s);
                e = b.rank0(e);
            }
        }
        return {v, e - s + 1};
    }

    // Occurrences of symbol in s_1..s_i.
    std::size_t rank(std::uint64_t symbol, std::size_t i) const {
        if (i > size_) throw range_error("rank position " + std::to_string(i) + " exceeds length " + std::to_string(size_));
        if (symbol >= sigma_) return 0;
        auto [s, e] = descend(symbol, 0, i);
        return e - s;
    }

    // Position of the j-th occurrence of symbol.
    std::size_t select(std::uint64_t symbol, std::size_t j) const {
        const auto [s, e] = symbol < sigma_ ? descend(symbol, 0, size_) : std::pair<std::size_t, std::size_t>{0, 0};
        if (j == 0 || j > e - s)
            throw not_found_error("select(" + std::to_string(symbol) + ", " + std::to_string(j) + ") has no answer");
        std::size_t p = s + j - 1;  // 0-based position at the bottom level
        for (std::size_t lv = levels_.size(); lv-- > 0;) {
            const unsigned shift = static_cast<unsigned>(levels_.size() - 1 - lv);
            const BitVector& b = levels_[lv];
            p = ((symbol >> shift) & 1u) ? b.select1(p - zeros_[lv] + 1) - 1 : b.select0(p + 1) - 1;
        }
        return p + 1;
    }

    // Number of positions k in [i, j] (1-based, inclusive) with s_k < bound.
    std::size_t count_less(std::size_t i, std::size_t j, std::uint64_t bound) const {
        if (i > j) return 0;
        if (i == 0 || j > size_) throw range_error("count range outside sequence");
        const unsigned nlevels = num_levels();
        if (nlevels < 64 && bound >= (std::uint64_t{1} << nlevels)) return j - i + 1;
        std::size_t a = i - 1, b = j, res = 0;
        for (unsigned lv = 0; lv < nlevels; ++lv) {
            const BitVector& bv = levels_[lv];
            const std::size_t a0 = bv.rank0(a), b0 = bv.rank0(b);
            if ((bound >> (nlevels - 1 - lv)) & 1u) {
                res += b0 - a0;
                a = zeros_[lv] + (a - a0);
                b = zeros_[lv] + (b - b0);
            } else {
                a = a0;
                b = b0;
            }
        }
        return res;
    }

    // Positions in [i, j] whose symbol lies in [lo, hi].
    std::size_t count_range(std::size_t i, std::size_t j, std::uint64_t lo, std::uint64_t hi) const {
        if (lo > hi || i > j) return 0;
        const std::size_t upto_hi = hi == ~std::uint64_t{0} ? j - i + 1 : count_less(i, j, hi + 1);
        return upto_hi - count_less(i, j, lo);
    }

    std::uint64_t space_bits() const noexcept {
        std::uint64_t s = zeros_.size() * 64;
        for (const auto& b : levels_) s += b.space_bits();
        return s;
    }

    void save(io::Writer& w) const {
        w.header("WAVM");
        w.u64(size_);
        w.u64(sigma_);
        w.u64(levels_.size());
        for (const auto& b : levels_) b.save(w);
    }

    static AlphabetSequence load(io::Reader& r) {
        r.header("WAVM");
        AlphabetSequence s;
        s.size_ = r.u64();
        s.sigma_ = r.u64();
        const std::uint64_t nl = r.u64();
        if (s.sigma_ == 0 || nl != bits::width_for(s.sigma_ - 1)) throw format_error("inconsistent wavelet level count");
        for (std::uint64_t lv = 0; lv < nl; ++lv) {
            s.levels_.push_back(BitVector::load(r));
            if (s.levels_.back().size() != s.size_) throw format_error("wavelet level length mismatch");
            s.zeros_.push_back(s.levels_.back().count(false));
        }
        return s;
    }

    friend bool operator==(const AlphabetSequence& a, const AlphabetSequence& b) {
        return a.size_ == b.size_ && a.sigma_ == b.sigma_ && a.levels_ == b.levels_;
    }

private:
    std::pair<std::size_t, std::size_t> descend(std::uint64_t symbol, std::size_t s, std::size_t e) const {
        for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
            const unsigned shift = static_cast<unsigned>(levels_.size() - 1 - lv);
            const BitVector& b = levels_[lv];
            if ((symbol >> shift) & 1u) {
                s = zeros_[lv] + b.rank1(s);
                e = zeros_[lv] + b.rank1(e);
            } else {
                s = b.rank0(s);
                e = b.rank0(e);
            }
        }
        return {s, e};
    }

    std::size_t size_ = 0;
    std::uint64_t sigma_ = 1;
    std::vector<BitVector> levels_;
    std::vector<std::size_t> zeros_;
};

}  // namespace sig
