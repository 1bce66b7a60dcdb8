#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sig/alphabet_sequence.hpp"
#include "sig/bit_vector.hpp"
#include "sig/error.hpp"
#include "sig/interval_queries.hpp"
#include "sig/range_extremum.hpp"
#include "sig/realization.hpp"
#include "sig/serialize.hpp"
#include "sig/space.hpp"

namespace sig {

enum class DepthMode : std::uint8_t {
    contained_by = 0,  // k-proper: depth = number of intervals containing v
    contains = 1,      // k-improper: depth = number of intervals v contains
};

namespace detail {

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : t_(n + 1, 0) {}
    void add(std::size_t i) {
        for (; i < t_.size(); i += i & (~i + 1)) ++t_[i];
    }
    std::size_t prefix(std::size_t i) const {
        std::size_t s = 0;
        for (; i > 0; i -= i & (~i + 1)) s += t_[i];
        return s;
    }

private:
    std::vector<std::size_t> t_;
};

}  // namespace detail

// Depth of every interval (index v-1), O(n log n).
inline std::vector<std::size_t> containment_depths(const IntervalRealization& real, DepthMode mode) {
    const std::size_t n = real.size();
    std::vector<std::size_t> depth(n, 0);
    detail::Fenwick seen(2 * n);
    if (mode == DepthMode::contained_by) {
        // containers of v start earlier and end later
        for (Vertex v = 1; v <= n; ++v) {
            depth[v - 1] = (v - 1) - seen.prefix(real[v].r);
            seen.add(real[v].r);
        }
    } else {
        // intervals inside v start later and end earlier
        for (Vertex v = n; v >= 1; --v) {
            depth[v - 1] = seen.prefix(real[v].r);
            seen.add(real[v].r);
        }
    }
    return depth;
}

// k-proper / k-improper interval graph: S plus the depth-coded endpoint
// sequence T over {0..2k+1}. t_i = 2d for a left endpoint and 2d+1 for a right
// endpoint of an interval of depth d. Each depth class is non-nesting, so r_v
// is the matching right endpoint inside its class:
//   r_v = select_{t+1}(T, rank_t(T, l_v)),  t = t_{l_v}.
class KProperGraph : public IntervalQueries<KProperGraph> {
public:
    static constexpr char tag[] = "SKGR";

    KProperGraph() = default;

    KProperGraph(const IntervalRealization& real, DepthMode mode, std::size_t block = RangeMaxIndex::default_block)
        : mode_(mode) {
        const std::size_t n = real.size();
        const auto depth = containment_depths(real, mode);
        k_ = *std::max_element(depth.begin(), depth.end());
        std::vector<bool> s(2 * n, true);
        std::vector<std::uint64_t> t(2 * n);
        for (Vertex v = 1; v <= n; ++v) {
            s[real[v].l - 1] = false;
            t[real[v].l - 1] = 2 * depth[v - 1];
            t[real[v].r - 1] = 2 * depth[v - 1] + 1;
        }
        s_ = BitVector(s);
        t_ = AlphabetSequence(t, 2 * k_ + 2);
        rmax_ = RangeMaxIndex(values(), n, block);
    }

    std::size_t size() const noexcept { return s_.size() / 2; }
    std::size_t k() const noexcept { return k_; }
    DepthMode mode() const noexcept { return mode_; }
    const BitVector& endpoint_bits() const noexcept { return s_; }
    const AlphabetSequence& depth_codes() const noexcept { return t_; }

    std::size_t depth(Vertex v) const {
        check(v);
        return t_.access(left(v)) / 2;
    }

    // Vertices of depth class d in label order.
    std::vector<Vertex> depth_class(std::size_t d) const {
        std::vector<Vertex> out;
        const std::size_t cnt = t_.rank(2 * d, t_.size());
        for (std::size_t j = 1; j <= cnt; ++j) out.push_back(s_.rank0(t_.select(2 * d, j)));
        return out;
    }

    std::uint64_t left(Vertex v) const { return s_.select0(v); }
    std::uint64_t right(Vertex v) const {
        const auto [t, k] = t_.access_rank(s_.select0(v));
        return t_.select(t + 1, k);
    }
    std::size_t lefts_upto(std::size_t i) const { return s_.rank0(i); }
    std::size_t rights_upto(std::size_t i) const { return s_.rank1(i); }
    Vertex argmax_right(std::size_t i, std::size_t j) const { return rmax_.query(values(), i, j); }

    SpaceReport space() const {
        SpaceReport rep;
        rep.add("S", s_.data_bits());
        rep.add("S.directory", s_.directory_bits());
        rep.add("T", t_.space_bits());
        rep.add("rmax", rmax_.space_bits());
        return rep;
    }
    std::uint64_t space_bits() const { return space().total(); }

    void save(io::Writer& w) const {
        w.header(tag);
        w.u64(size());
        w.u8(static_cast<std::uint8_t>(mode_));
        w.u64(k_);
        s_.save(w);
        t_.save(w);
        rmax_.save(w);
    }

    static KProperGraph load(io::Reader& rd) {
        rd.header(tag);
        KProperGraph g;
        const std::uint64_t n = rd.u64();
        const auto mode = rd.u8();
        if (mode > 1) throw format_error("SKGR unknown depth mode");
        g.mode_ = static_cast<DepthMode>(mode);
        g.k_ = rd.u64();
        g.s_ = BitVector::load(rd);
        g.t_ = AlphabetSequence::load(rd);
        g.rmax_ = RangeMaxIndex::load(rd);
        if (n == 0 || g.s_.size() != 2 * n || g.s_.count_ones() != n || g.t_.size() != 2 * n ||
            g.t_.sigma() != 2 * g.k_ + 2 || g.rmax_.size() != n)
            throw format_error("SKGR component lengths disagree");
        for (std::size_t i = 1; i <= 2 * n; ++i)
            if ((g.t_.access(i) & 1u) != static_cast<std::uint64_t>(g.s_.access(i)))
                throw format_error("SKGR depth codes disagree with S");
        return g;
    }

private:
    struct RightValues {
        const KProperGraph* g;
        std::uint64_t operator()(std::size_t v) const { return g->right(v); }
    };
    RightValues values() const { return {this}; }

    DepthMode mode_ = DepthMode::contained_by;
    std::size_t k_ = 0;
    BitVector s_;
    AlphabetSequence t_;
    RangeMaxIndex rmax_;
};

}  // namespace sig
