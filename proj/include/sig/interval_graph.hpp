#pragma once

#include <cstdint>
#include <vector>

#include "sig/bit_vector.hpp"
#include "sig/error.hpp"
#include "sig/int_vector.hpp"
#include "sig/interval_queries.hpp"
#include "sig/range_extremum.hpp"
#include "sig/realization.hpp"
#include "sig/serialize.hpp"
#include "sig/space.hpp"

namespace sig {

// Interval graph in n*ceil(log 2n) + (2+eps)n + o(n) bits:
//   S  - s_i = 0 iff position i is a left endpoint (rank/select),
//   r  - right endpoints r_1..r_n in label order, packed,
//   range max/min over r with block parameter c (the eps knob).
class SuccinctIntervalGraph : public IntervalQueries<SuccinctIntervalGraph> {
public:
    static constexpr char tag[] = "SIGR";

    SuccinctIntervalGraph() = default;

    explicit SuccinctIntervalGraph(const IntervalRealization& real, std::size_t block = RangeMaxIndex::default_block) {
        const std::size_t n = real.size();
        std::vector<bool> s(2 * n, true);
        std::vector<std::uint64_t> r(n);
        for (Vertex v = 1; v <= n; ++v) {
            s[real[v].l - 1] = false;
            r[v - 1] = real[v].r;
        }
        s_ = BitVector(s);
        r_ = IntVector(r);
        build_extrema(block);
    }

    std::size_t size() const noexcept { return r_.size(); }
    const BitVector& endpoint_bits() const noexcept { return s_; }

    std::uint64_t left(Vertex v) const { return s_.select0(v); }
    std::uint64_t right(Vertex v) const { return r_[v - 1]; }
    std::size_t lefts_upto(std::size_t i) const { return s_.rank0(i); }
    std::size_t rights_upto(std::size_t i) const { return s_.rank1(i); }
    Vertex argmax_right(std::size_t i, std::size_t j) const { return rmax_.query(values(), i, j); }
    Vertex argmin_right(std::size_t i, std::size_t j) const { return rmin_.query(values(), i, j); }

    IntervalRealization realization() const {
        std::vector<Endpoints> iv(size());
        for (Vertex v = 1; v <= size(); ++v) iv[v - 1] = {left(v), right(v)};
        return IntervalRealization(std::move(iv));
    }

    SpaceReport space() const {
        SpaceReport rep;
        rep.add("S", s_.data_bits());
        rep.add("S.directory", s_.directory_bits());
        rep.add("r", r_.space_bits());
        rep.add("rmax", rmax_.space_bits());
        rep.add("rmin", rmin_.space_bits());
        return rep;
    }
    std::uint64_t space_bits() const { return space().total(); }

    void save(io::Writer& w) const {
        w.header(tag);
        w.u64(size());
        s_.save(w);
        r_.save(w);
        rmax_.save(w);
        rmin_.save(w);
    }

    static SuccinctIntervalGraph load(io::Reader& rd) {
        rd.header(tag);
        SuccinctIntervalGraph g;
        const std::uint64_t n = rd.u64();
        g.s_ = BitVector::load(rd);
        g.r_ = IntVector::load(rd);
        g.rmax_ = RangeMaxIndex::load(rd);
        g.rmin_ = RangeMinIndex::load(rd);
        if (n == 0 || g.s_.size() != 2 * n || g.s_.count_ones() != n || g.r_.size() != n || g.rmax_.size() != n ||
            g.rmin_.size() != n)
            throw format_error("SIGR component lengths disagree");
        for (Vertex v = 1; v <= n; ++v) {
            const auto r = g.right(v);
            if (r == 0 || r > 2 * n || !g.s_.access(r) || r <= g.left(v)) throw format_error("SIGR right endpoints corrupt");
        }
        return g;
    }

private:
    struct RightValues {
        const IntVector* r;
        std::uint64_t operator()(std::size_t i) const { return (*r)[i - 1]; }
    };
    RightValues values() const { return {&r_}; }

    void build_extrema(std::size_t block) {
        rmax_ = RangeMaxIndex(values(), size(), block);
        rmin_ = RangeMinIndex(values(), size(), block);
    }

    BitVector s_;
    IntVector r_;
    RangeMaxIndex rmax_;
    RangeMinIndex rmin_;
};

}  // namespace sig
