#pragma once

#include <cstdint>
#include <vector>

#include "sig/bit_vector.hpp"
#include "sig/error.hpp"
#include "sig/interval_queries.hpp"
#include "sig/realization.hpp"
#include "sig/serialize.hpp"
#include "sig/space.hpp"

namespace sig {

// Proper (unit) interval graph in 2n + o(n) bits: only S is stored. With no
// nesting the j-th left endpoint pairs with the j-th right endpoint, r is
// strictly increasing, and range max/min are the range ends.
class ProperIntervalGraph : public IntervalQueries<ProperIntervalGraph> {
public:
    static constexpr char tag[] = "SPGR";

    ProperIntervalGraph() = default;

    explicit ProperIntervalGraph(const IntervalRealization& real) {
        const std::size_t n = real.size();
        Vertex widest = 1;
        for (Vertex v = 2; v <= n; ++v) {
            if (real[v].r < real[widest].r) throw not_proper_error(widest, v);
            widest = v;
        }
        std::vector<bool> s(2 * n, true);
        for (Vertex v = 1; v <= n; ++v) s[real[v].l - 1] = false;
        s_ = BitVector(s);
    }

    std::size_t size() const noexcept { return s_.size() / 2; }
    const BitVector& endpoint_bits() const noexcept { return s_; }

    std::uint64_t left(Vertex v) const { return s_.select0(v); }
    std::uint64_t right(Vertex v) const { return s_.select1(v); }
    std::size_t lefts_upto(std::size_t i) const { return s_.rank0(i); }
    std::size_t rights_upto(std::size_t i) const { return s_.rank1(i); }
    Vertex argmax_right(std::size_t, std::size_t j) const { return j; }
    Vertex argmin_right(std::size_t i, std::size_t) const { return i; }

    SpaceReport space() const {
        SpaceReport rep;
        rep.add("S", s_.data_bits());
        rep.add("S.directory", s_.directory_bits());
        return rep;
    }
    std::uint64_t space_bits() const { return space().total(); }

    void save(io::Writer& w) const {
        w.header(tag);
        w.u64(size());
        s_.save(w);
    }

    static ProperIntervalGraph load(io::Reader& rd) {
        rd.header(tag);
        ProperIntervalGraph g;
        const std::uint64_t n = rd.u64();
        g.s_ = BitVector::load(rd);
        if (n == 0 || g.s_.size() != 2 * n || g.s_.count_ones() != n) throw format_error("SPGR component lengths disagree");
        for (Vertex v = 1; v <= n; ++v)
            if (g.s_.select1(v) < g.s_.select0(v)) throw format_error("SPGR bit sequence is not balanced");
        return g;
    }

private:
    BitVector s_;
};

}  // namespace sig
