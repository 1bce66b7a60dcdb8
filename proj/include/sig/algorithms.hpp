#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sig/int_vector.hpp"
#include "sig/realization.hpp"

namespace sig {

// Interval-graph representations the algorithms run on: the CRTP queries plus
// range-min over right endpoints and the endpoint bit sequence S.
template <class G>
concept IntervalGraphLike = requires(const G& g, std::size_t i, Vertex v) {
    { g.size() } -> std::convertible_to<std::size_t>;
    { g.right(v) } -> std::convertible_to<std::uint64_t>;
    { g.lefts_upto(i) } -> std::convertible_to<std::size_t>;
    { g.argmin_right(i, i) } -> std::convertible_to<Vertex>;
    g.endpoint_bits();
};

struct CliqueWitness {
    std::size_t cut = 0;  // endpoint position k; members have l <= k < r
    std::vector<Vertex> members;
    std::size_t size() const noexcept { return members.size(); }
};

struct Coloring {
    IntVector colors;  // colors[v-1] in 1..chromatic
    std::size_t chromatic = 0;
    std::size_t color(Vertex v) const { return colors[v - 1]; }
};

namespace detail {
inline std::vector<Vertex> identity_order(std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{1});
    return order;
}
}  // namespace detail

// Labels follow left endpoints, so 1..n is simultaneously a DFS order, a BFS
// order and a perfect elimination ordering.
template <IntervalGraphLike G>
std::vector<Vertex> dfs_order(const G& g) {
    return detail::identity_order(g.size());
}

template <IntervalGraphLike G>
std::vector<Vertex> bfs_order(const G& g) {
    return detail::identity_order(g.size());
}

template <IntervalGraphLike G>
std::vector<Vertex> peo(const G& g) {
    return detail::identity_order(g.size());
}

// Repeatedly take the interval with the leftmost right endpoint among those
// starting after the last chosen one ends.
template <IntervalGraphLike G>
std::vector<Vertex> mis(const G& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> out;
    std::size_t from = 1;
    while (from <= n) {
        const Vertex m = g.argmin_right(from, n);
        out.push_back(m);
        from = g.lefts_upto(g.right(m)) + 1;
    }
    return out;
}

template <IntervalGraphLike G>
std::vector<Vertex> mvc(const G& g) {
    const auto in = mis(g);
    std::vector<Vertex> out;
    out.reserve(g.size() - in.size());
    std::size_t k = 0;
    for (Vertex v = 1; v <= g.size(); ++v) {
        if (k < in.size() && in[k] == v) ++k;
        else out.push_back(v);
    }
    return out;
}

// d_i = number of intervals open just after position i.
template <IntervalGraphLike G>
std::vector<std::size_t> d_sequence(const G& g) {
    const auto& s = g.endpoint_bits();
    std::vector<std::size_t> d(s.size());
    std::size_t open = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        open = s.access(i) ? open - 1 : open + 1;
        d[i - 1] = open;
    }
    return d;
}

template <IntervalGraphLike G>
CliqueWitness max_clique(const G& g) {
    const auto d = d_sequence(g);
    const std::size_t k = static_cast<std::size_t>(std::max_element(d.begin(), d.end()) - d.begin()) + 1;
    CliqueWitness w;
    w.cut = k;
    g.report_right_above(1, g.lefts_upto(k), k, [&](Vertex u) { w.members.push_back(u); });
    std::sort(w.members.begin(), w.members.end());
    return w;
}

// First-fit in label order, looking only at earlier neighbors.
template <IntervalGraphLike G>
Coloring greedy_coloring(const G& g) {
    const std::size_t n = g.size();
    Coloring c;
    c.colors = IntVector(n, bits::width_for(n));
    std::vector<std::size_t> taken(n + 2, 0);  // taken[col] == v marks col used by a neighbor of v
    for (Vertex v = 1; v <= n; ++v) {
        g.report_right_above(1, v - 1, g.left(v), [&](Vertex u) { taken[c.colors[u - 1]] = v; });
        std::size_t col = 1;
        while (taken[col] == v) ++col;
        c.colors.set(v - 1, col);
        c.chromatic = std::max(c.chromatic, col);
    }
    return c;
}

}  // namespace sig
