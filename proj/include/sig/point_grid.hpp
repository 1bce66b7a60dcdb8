#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "sig/alphabet_sequence.hpp"
#include "sig/error.hpp"
#include "sig/serialize.hpp"

namespace sig {

// M points on [1,M] x [1,M], one per column: a permutation x -> y.
// Stored as a wavelet matrix over y_1..y_M, so both Y and rectangle counting
// run in O(log M).
class PointGrid {
public:
    PointGrid() = default;

    // ys[x-1] is the y-coordinate of the point in column x.
    explicit PointGrid(std::span<const std::uint64_t> ys) : size_(ys.size()) {
        std::vector<bool> seen(size_ + 1, false);
        std::vector<std::uint64_t> shifted(size_);
        for (std::size_t x = 0; x < size_; ++x) {
            const auto y = ys[x];
            if (y == 0 || y > size_ || seen[y]) throw realization_error("grid y-coordinates must be a permutation of 1..M");
            seen[y] = true;
            shifted[x] = y - 1;
        }
        ys_ = AlphabetSequence(shifted, std::max<std::size_t>(size_, 1));
    }

    std::size_t size() const noexcept { return size_; }

    std::uint64_t y(std::size_t x) const {
        if (x == 0 || x > size_) throw range_error("grid column " + std::to_string(x) + " outside [1," + std::to_string(size_) + "]");
        return ys_.access(x) + 1;
    }

    // Points in [x1,x2] x [y1,y2]; the rectangle is clamped to the grid.
    std::size_t count(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) const {
        const auto m = static_cast<std::int64_t>(size_);
        x1 = std::max<std::int64_t>(x1, 1);
        y1 = std::max<std::int64_t>(y1, 1);
        x2 = std::min(x2, m);
        y2 = std::min(y2, m);
        if (x1 > x2 || y1 > y2) return 0;
        return ys_.count_range(static_cast<std::size_t>(x1), static_cast<std::size_t>(x2),
                               static_cast<std::uint64_t>(y1 - 1), static_cast<std::uint64_t>(y2 - 1));
    }

    std::uint64_t space_bits() const noexcept { return ys_.space_bits(); }

    void save(io::Writer& w) const {
        w.header("GRID");
        w.u64(size_);
        ys_.save(w);
    }

    static PointGrid load(io::Reader& r) {
        r.header("GRID");
        PointGrid g;
        g.size_ = r.u64();
        g.ys_ = AlphabetSequence::load(r);
        if (g.ys_.size() != g.size_) throw format_error("grid length mismatch");
        return g;
    }

    friend bool operator==(const PointGrid& a, const PointGrid& b) { return a.size_ == b.size_ && a.ys_ == b.ys_; }

private:
    std::size_t size_ = 0;
    AlphabetSequence ys_;
};

}  // namespace sig
