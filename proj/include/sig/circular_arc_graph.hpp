#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sig/alphabet_sequence.hpp"
#include "sig/bit_vector.hpp"
#include "sig/error.hpp"
#include "sig/int_vector.hpp"
#include "sig/point_grid.hpp"
#include "sig/range_extremum.hpp"
#include "sig/realization.hpp"
#include "sig/serialize.hpp"
#include "sig/space.hpp"

namespace sig {

// Endpoint classes of S': 0/1 = left/right endpoint of a normal arc,
// 2/3 = left/right endpoint of a reversed arc.
enum class Endpoint : std::uint8_t { normal_left = 0, normal_right = 1, reversed_left = 2, reversed_right = 3 };

// Circular-arc graph in n log n + o(n log n) bits.
//
//   S'  - endpoint classes over {0,1,2,3}. Stored as a wavelet matrix whose
//         top level is the left/right bit, so S itself (rank/select on
//         "left endpoint") comes for free from level 0.
//   R1  - points (rank_0(S', l_i), rank_1(S', r_i)) of the q normal arcs.
//   R2  - points (rank_2(S', l_i), rank_3(S', r_i)) of the reversed arcs.
//   range max over r' (normal right endpoints, normal-left order) and r''
//         (reversed ones). r' is order-isomorphic to the y column of R1, so
//         the index reads Y(R1, .) instead of storing r'.
class CircularArcGraph {
public:
    static constexpr char tag[] = "SCAG";

    struct Options {
        std::size_t block = RangeMaxIndex::default_block;
        bool degree_table = false;
    };

    CircularArcGraph() = default;

    explicit CircularArcGraph(const ArcRealization& arcs) : CircularArcGraph(arcs, Options{}) {}

    CircularArcGraph(const ArcRealization& arcs, Options opt) : n_(arcs.size()) {
        std::vector<std::uint64_t> codes(2 * n_);
        for (Vertex v = 1; v <= n_; ++v) {
            const bool rev = arcs.reversed(v);
            codes[arcs[v].l - 1] = code(rev ? Endpoint::reversed_left : Endpoint::normal_left);
            codes[arcs[v].r - 1] = code(rev ? Endpoint::reversed_right : Endpoint::normal_right);
            if (!rev) ++q_;
        }
        sp_ = AlphabetSequence(codes, 4);
        std::vector<std::uint64_t> y1, y2;
        y1.reserve(q_);
        y2.reserve(n_ - q_);
        for (Vertex v = 1; v <= n_; ++v) {
            if (arcs.reversed(v)) y2.push_back(rank(Endpoint::reversed_right, arcs[v].r));
            else y1.push_back(rank(Endpoint::normal_right, arcs[v].r));
        }
        r1_ = PointGrid(y1);
        r2_ = PointGrid(y2);
        rmax1_ = RangeMaxIndex(GridColumn{&r1_}, q_, opt.block);
        rmax2_ = RangeMaxIndex(GridColumn{&r2_}, n_ - q_, opt.block);
        if (opt.degree_table) {
            std::vector<std::uint64_t> deg(n_);
            for (Vertex v = 1; v <= n_; ++v) deg[v - 1] = computed_degree(v);
            degrees_ = IntVector(deg);
            has_degrees_ = true;
        }
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t normal_count() const noexcept { return q_; }
    std::size_t reversed_count() const noexcept { return n_ - q_; }
    bool has_degree_table() const noexcept { return has_degrees_; }

    // rank/select/access on S' in terms of endpoint classes.
    std::size_t rank(Endpoint e, std::size_t i) const { return sp_.rank(code(e), i); }
    std::size_t select(Endpoint e, std::size_t j) const { return sp_.select(code(e), j); }
    Endpoint endpoint_at(std::size_t i) const { return decode(sp_.access(i)); }
    const BitVector& endpoint_bits() const { return sp_.level(0); }

    const PointGrid& normal_grid() const noexcept { return r1_; }
    const PointGrid& reversed_grid() const noexcept { return r2_; }

    std::uint64_t left(Vertex v) const {
        check(v);
        return s().select0(v);
    }

    std::uint64_t right(Vertex v) const {
        const std::uint64_t l = left(v);
        if (endpoint_at(l) == Endpoint::normal_left)
            return select(Endpoint::normal_right, r1_.y(rank(Endpoint::normal_left, l)));
        return select(Endpoint::reversed_right, r2_.y(rank(Endpoint::reversed_left, l)));
    }

    Endpoints arc(Vertex v) const { return {left(v), right(v)}; }
    bool reversed(Vertex v) const { return endpoint_at(left(v)) == Endpoint::reversed_left; }

    // r'_i and r''_i
    std::uint64_t normal_right(std::size_t i) const { return select(Endpoint::normal_right, r1_.y(i)); }
    std::uint64_t reversed_right(std::size_t j) const { return select(Endpoint::reversed_right, r2_.y(j)); }

    ArcRealization realization() const {
        std::vector<Endpoints> a(n_);
        for (Vertex v = 1; v <= n_; ++v) a[v - 1] = arc(v);
        return ArcRealization(std::move(a));
    }

    bool adjacent(Vertex u, Vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        return arcs_meet(arc(u), arc(v));
    }

    std::size_t degree(Vertex v) const {
        check(v);
        if (has_degrees_) return degrees_[v - 1];
        return computed_degree(v);
    }

    std::vector<Vertex> neighborhood(Vertex v) const {
        check(v);
        const auto [l, r] = arc(v);
        const std::size_t nr = n_ - q_;
        std::vector<Vertex> out;
        auto add = [&](Vertex u) {
            if (u != v) out.push_back(u);
        };
        const std::size_t y1_floor = rank(Endpoint::normal_right, l);
        const std::size_t y2_floor = rank(Endpoint::reversed_right, l);
        if (l < r) {
            const std::size_t k0 = rank(Endpoint::normal_left, r);
            report_above(rmax1_, r1_, 1, k0, y1_floor, [&](std::size_t i) { add(normal_vertex(i)); });
            const std::size_t k2 = rank(Endpoint::reversed_left, r);
            for (std::size_t j = 1; j <= k2; ++j) add(reversed_vertex(j));
            report_above(rmax2_, r2_, k2 + 1, nr, y2_floor, [&](std::size_t j) { add(reversed_vertex(j)); });
        } else {
            for (std::size_t j = 1; j <= nr; ++j) add(reversed_vertex(j));
            const std::size_t k0 = rank(Endpoint::normal_left, r);
            for (std::size_t i = 1; i <= k0; ++i) add(normal_vertex(i));
            report_above(rmax1_, r1_, k0 + 1, q_, y1_floor, [&](std::size_t i) { add(normal_vertex(i)); });
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Arc containing the clockwise end of u that reaches farthest clockwise
    // past it. Reversed arcs starting before that point wrap through the
    // origin and beat everything else; otherwise the best normal arc
    // starting before it competes with the reversed arc of largest right end.
    // nullopt when no arc extends past r_u.
    std::optional<Vertex> succ(Vertex u) const {
        check(u);
        const std::uint64_t p = right(u);
        const std::size_t k2 = rank(Endpoint::reversed_left, p);
        if (k2 > 0) return reversed_vertex(rmax2_.query(GridColumn{&r2_}, 1, k2));
        std::optional<Vertex> best;
        std::uint64_t best_r = p;
        const std::size_t k0 = rank(Endpoint::normal_left, p);
        if (k0 > 0) {
            const std::size_t i = rmax1_.query(GridColumn{&r1_}, 1, k0);
            if (normal_right(i) > best_r) best = normal_vertex(i), best_r = normal_right(i);
        }
        if (n_ > q_) {
            const std::size_t j = rmax2_.query(GridColumn{&r2_}, 1, n_ - q_);
            if (reversed_right(j) > best_r) best = reversed_vertex(j), best_r = reversed_right(j);
        }
        return best;
    }

    // Shortest u-v path. Two greedy SUCC chains run in alternation, one from
    // u and one from v, starting with u's; the first whose head touches the
    // other endpoint wins. nullopt when u and v are disconnected.
    std::optional<std::vector<Vertex>> spath(Vertex u, Vertex v) const {
        check(u);
        check(v);
        if (u == v) return std::vector<Vertex>{u};
        if (adjacent(u, v)) return std::vector<Vertex>{u, v};
        struct Chain {
            std::vector<Vertex> path;
            bool live = true;
        };
        Chain fwd{{u}}, bwd{{v}};
        auto step = [&](Chain& c, Vertex target) {
            if (!c.live) return false;
            const auto next = succ(c.path.back());
            if (!next || c.path.size() > n_) {
                c.live = false;
                return false;
            }
            c.path.push_back(*next);
            if (adjacent(*next, target)) {
                c.path.push_back(target);
                return true;
            }
            return false;
        };
        while (fwd.live || bwd.live) {
            if (step(fwd, v)) return fwd.path;
            if (step(bwd, u)) {
                std::reverse(bwd.path.begin(), bwd.path.end());
                return bwd.path;
            }
        }
        return std::nullopt;
    }

    SpaceReport space() const {
        SpaceReport rep;
        rep.add("S'", sp_.space_bits());
        rep.add("R1", r1_.space_bits());
        rep.add("R2", r2_.space_bits());
        rep.add("rmax'", rmax1_.space_bits());
        rep.add("rmax''", rmax2_.space_bits());
        if (has_degrees_) rep.add("degree_table", degrees_.space_bits());
        return rep;
    }
    std::uint64_t space_bits() const { return space().total(); }

    void save(io::Writer& w) const {
        w.header(tag);
        w.u64(n_);
        w.u64(q_);
        sp_.save(w);
        r1_.save(w);
        r2_.save(w);
        rmax1_.save(w);
        rmax2_.save(w);
        w.u8(has_degrees_ ? 1 : 0);
        if (has_degrees_) degrees_.save(w);
    }

    static CircularArcGraph load(io::Reader& rd) {
        rd.header(tag);
        CircularArcGraph g;
        g.n_ = rd.u64();
        g.q_ = rd.u64();
        g.sp_ = AlphabetSequence::load(rd);
        g.r1_ = PointGrid::load(rd);
        g.r2_ = PointGrid::load(rd);
        g.rmax1_ = RangeMaxIndex::load(rd);
        g.rmax2_ = RangeMaxIndex::load(rd);
        g.has_degrees_ = rd.u8() != 0;
        if (g.has_degrees_) g.degrees_ = IntVector::load(rd);
        const std::size_t n = g.n_, q = g.q_;
        if (n == 0 || q > n || g.sp_.size() != 2 * n || g.sp_.sigma() != 4 || g.r1_.size() != q ||
            g.r2_.size() != n - q || g.rmax1_.size() != q || g.rmax2_.size() != n - q ||
            (g.has_degrees_ && g.degrees_.size() != n))
            throw format_error("SCAG component lengths disagree");
        if (g.rank(Endpoint::normal_left, 2 * n) != q || g.rank(Endpoint::normal_right, 2 * n) != q ||
            g.rank(Endpoint::reversed_left, 2 * n) != n - q || g.rank(Endpoint::reversed_right, 2 * n) != n - q)
            throw format_error("SCAG endpoint classes unbalanced");
        return g;
    }

    // Point-set intersection of two arcs on positions 1..2n.
    static bool arcs_meet(Endpoints a, Endpoints b) {
        const bool ra = a.r < a.l, rb = b.r < b.l;
        if (ra && rb) return true;
        if (!ra && !rb) return !(a.r < b.l || b.r < a.l);
        if (ra) std::swap(a, b);  // a normal, b reversed
        return a.l < b.r || a.r > b.l;
    }

private:
    struct GridColumn {
        const PointGrid* g;
        std::uint64_t operator()(std::size_t x) const { return g->y(x); }
    };

    // Symbol codes put the left/right bit on top so level 0 of the wavelet
    // matrix is S.
    static constexpr std::uint64_t code(Endpoint e) {
        const auto s = static_cast<std::uint64_t>(e);
        return ((s & 1u) << 1) | (s >> 1);
    }
    static constexpr Endpoint decode(std::uint64_t c) { return static_cast<Endpoint>(((c & 1u) << 1) | (c >> 1)); }

    const BitVector& s() const { return sp_.level(0); }

    Vertex normal_vertex(std::size_t i) const { return s().rank0(select(Endpoint::normal_left, i)); }
    Vertex reversed_vertex(std::size_t j) const { return s().rank0(select(Endpoint::reversed_left, j)); }

    std::size_t computed_degree(Vertex v) const {
        const auto [l, r] = arc(v);
        const std::size_t nr = n_ - q_;
        if (l < r) {
            const std::size_t normal = rank(Endpoint::normal_left, r) - rank(Endpoint::normal_right, l) - 1;
            // reversed u meets v iff r_u > l_v or l_u < r_v
            const std::size_t k2 = rank(Endpoint::reversed_left, r);
            const std::size_t y3 = rank(Endpoint::reversed_right, l);
            const std::size_t ends_after = nr - y3;
            const std::size_t both = r2_.count(1, static_cast<std::int64_t>(k2), static_cast<std::int64_t>(y3) + 1,
                                               static_cast<std::int64_t>(nr));
            return normal + ends_after + k2 - both;
        }
        // normal u meets reversed v iff l_u < r_v or r_u > l_v
        const std::size_t k0 = rank(Endpoint::normal_left, r);
        const std::size_t y1 = rank(Endpoint::normal_right, l);
        const std::size_t both =
            r1_.count(1, static_cast<std::int64_t>(k0), static_cast<std::int64_t>(y1) + 1, static_cast<std::int64_t>(q_));
        return k0 + (q_ - y1) - both + (nr - 1);
    }

    // Indices x in [a, b] with Y(grid, x) > floor, by range-max recursion.
    template <class Emit>
    static void report_above(const RangeMaxIndex& idx, const PointGrid& grid, std::size_t a, std::size_t b,
                             std::uint64_t floor, Emit&& emit) {
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        if (a <= b) stack.emplace_back(a, b);
        const GridColumn col{&grid};
        while (!stack.empty()) {
            auto [x, y] = stack.back();
            stack.pop_back();
            const std::size_t c = idx.query(col, x, y);
            if (grid.y(c) <= floor) continue;
            emit(c);
            if (c > x) stack.emplace_back(x, c - 1);
            if (c < y) stack.emplace_back(c + 1, y);
        }
    }

    void check(Vertex v) const {
        if (v == 0 || v > n_) throw range_error("vertex " + std::to_string(v) + " outside [1," + std::to_string(n_) + "]");
    }

    std::size_t n_ = 0;
    std::size_t q_ = 0;
    AlphabetSequence sp_;
    PointGrid r1_;
    PointGrid r2_;
    RangeMaxIndex rmax1_;
    RangeMaxIndex rmax2_;
    bool has_degrees_ = false;
    IntVector degrees_;
};

}  // namespace sig
