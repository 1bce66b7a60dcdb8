#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sig/bits.hpp"
#include "sig/error.hpp"
#include "sig/serialize.hpp"

namespace sig {

// Fixed-width packed unsigned integers. Indexing is 0-based like any container.
class IntVector {
public:
    IntVector() = default;

    IntVector(std::size_t size, unsigned width) : size_(size), width_(width) {
        if (width_ == 0 || width_ > 64) throw range_error("IntVector width must be in [1,64]");
        words_.assign(bits::words_for(size_ * width_), 0);
    }

    // Width chosen as the smallest that fits max(values).
    explicit IntVector(std::span<const std::uint64_t> values) {
        std::uint64_t mx = 0;
        for (auto v : values) mx = v > mx ? v : mx;
        *this = IntVector(values.size(), bits::width_for(mx));
        for (std::size_t i = 0; i < values.size(); ++i) set(i, values[i]);
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    unsigned width() const noexcept { return width_; }

    std::uint64_t operator[](std::size_t i) const noexcept {
        const std::size_t bit = i * width_;
        const std::size_t w = bit / 64;
        const unsigned off = bit % 64;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return v & bits::low_mask(width_);
    }

    std::uint64_t at(std::size_t i) const {
        if (i >= size_) throw range_error("IntVector index " + std::to_string(i) + " out of range");
        return (*this)[i];
    }

    void set(std::size_t i, std::uint64_t v) {
        if (i >= size_) throw range_error("IntVector index out of range");
        if (v > bits::low_mask(width_)) throw range_error("value does not fit IntVector width");
        const std::size_t bit = i * width_;
        const std::size_t w = bit / 64;
        const unsigned off = bit % 64;
        const std::uint64_t mask = bits::low_mask(width_);
        words_[w] = (words_[w] & ~(mask << off)) | (v << off);
        if (off + width_ > 64) {
            const unsigned spill = off + width_ - 64;
            const std::uint64_t hi_mask = bits::low_mask(spill);
            words_[w + 1] = (words_[w + 1] & ~hi_mask) | (v >> (64 - off));
        }
    }

    std::uint64_t space_bits() const noexcept { return words_.size() * 64; }

    void save(io::Writer& w) const {
        w.header("INTV");
        w.u64(size_);
        w.u8(static_cast<std::uint8_t>(width_));
        w.words(words_);
    }

    static IntVector load(io::Reader& r) {
        r.header("INTV");
        IntVector v;
        v.size_ = r.u64();
        v.width_ = r.u8();
        if (v.width_ == 0 || v.width_ > 64) throw format_error("bad IntVector width");
        if (v.size_ > (std::uint64_t{1} << 40)) throw format_error("IntVector too large");
        v.words_ = r.words(bits::words_for(v.size_ * v.width_));
        if (v.words_.size() != bits::words_for(v.size_ * v.width_))
            throw format_error("IntVector payload length mismatch");
        return v;
    }

    friend bool operator==(const IntVector&, const IntVector&) = default;

private:
    std::size_t size_ = 0;
    unsigned width_ = 1;
    std::vector<std::uint64_t> words_;
};

}  // namespace sig
