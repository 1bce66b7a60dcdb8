#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sig/error.hpp"
#include "sig/realization.hpp"

namespace sig {

// Navigational queries shared by every representation of an interval graph
// whose vertices are labeled by left endpoint. Derived supplies
//   size(), left(v), right(v),
//   lefts_upto(i)  = rank_0(S, i)   (intervals starting at or before i),
//   rights_upto(i) = rank_1(S, i)   (intervals ending at or before i),
//   argmax_right(i, j)  leftmost u in [i, j] maximizing r_u.
template <class Derived>
class IntervalQueries {
public:
    Endpoints interval(Vertex v) const {
        check(v);
        return {self().left(v), self().right(v)};
    }

    // Vertices whose interval meets v's, v excluded. The closed-form
    // rank_0(S, r_v) - rank_1(S, l_v) counts v itself, hence the -1.
    std::size_t degree(Vertex v) const {
        check(v);
        return self().lefts_upto(self().right(v)) - self().rights_upto(self().left(v)) - 1;
    }

    bool adjacent(Vertex u, Vertex v) const {
        check(u);
        check(v);
        if (u == v) return false;
        const auto a = interval(u), b = interval(v);
        return !(a.r < b.l || b.r < a.l);
    }

    // Sorted ascending.
    std::vector<Vertex> neighborhood(Vertex v) const {
        check(v);
        const auto [lv, rv] = interval(v);
        std::vector<Vertex> out;
        report_right_above(1, self().lefts_upto(rv), lv, [&](Vertex u) {
            if (u != v) out.push_back(u);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    // Among intervals starting before r_u, the one reaching farthest right,
    // provided it meets u. Returns u itself when nothing reaches further.
    std::optional<Vertex> succ(Vertex u) const {
        check(u);
        const auto [lu, ru] = interval(u);
        const Vertex i = self().argmax_right(1, self().lefts_upto(ru));
        if (self().right(i) > lu) return i;
        return std::nullopt;
    }

    // A shortest path from u to v (both included), or nullopt when u and v
    // lie in different components.
    std::optional<std::vector<Vertex>> spath(Vertex u, Vertex v) const {
        check(u);
        check(v);
        const bool swapped = v < u;
        if (swapped) std::swap(u, v);
        std::vector<Vertex> path{u};
        Vertex cur = u;
        while (cur != v) {
            if (adjacent(cur, v)) {
                path.push_back(v);
                break;
            }
            const auto next = succ(cur);
            if (!next || self().right(*next) <= self().right(cur)) return std::nullopt;
            cur = *next;
            path.push_back(cur);
        }
        if (swapped) std::reverse(path.begin(), path.end());
        return path;
    }

    // Calls emit(u) for every u in [a, b] with r_u > threshold, using the
    // range-max recursion; cost is O(1) range-max queries per reported vertex.
    template <class Emit>
    void report_right_above(std::size_t a, std::size_t b, std::uint64_t threshold, Emit&& emit) const {
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        if (a <= b) stack.emplace_back(a, b);
        while (!stack.empty()) {
            auto [x, y] = stack.back();
            stack.pop_back();
            const Vertex c = self().argmax_right(x, y);
            if (self().right(c) <= threshold) continue;
            emit(c);
            if (c > x) stack.emplace_back(x, c - 1);
            if (c < y) stack.emplace_back(c + 1, y);
        }
    }

    void check(Vertex v) const {
        if (v == 0 || v > self().size())
            throw range_error("vertex " + std::to_string(v) + " outside [1," + std::to_string(self().size()) + "]");
    }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace sig
