#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "sig/error.hpp"
#include "sig/realization.hpp"

// Brute-force reference answers. Quadratic space, meant for tests and
// `sig verify` only.
namespace sig::oracle {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t exhaustive_limit = 20;
inline constexpr std::size_t dp_limit = 1000;

class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

    static Graph from_intervals(const IntervalRealization& real) {
        Graph g(real.size());
        for (Vertex u = 1; u <= g.n_; ++u)
            for (Vertex v = u + 1; v <= g.n_; ++v)
                if (std::max(real[u].l, real[v].l) <= std::min(real[u].r, real[v].r)) g.connect(u, v);
        return g;
    }

    // Arcs as point sets of positions on the 2n-cycle.
    static Graph from_arcs(const ArcRealization& arcs) {
        const std::size_t n = arcs.size(), m = 2 * n;
        std::vector<std::vector<bool>> cover(n + 1, std::vector<bool>(m + 1, false));
        for (Vertex v = 1; v <= n; ++v) {
            std::uint64_t p = arcs[v].l;
            while (true) {
                cover[v][p] = true;
                if (p == arcs[v].r) break;
                p = p == m ? 1 : p + 1;
            }
        }
        Graph g(n);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                for (std::size_t p = 1; p <= m; ++p)
                    if (cover[u][p] && cover[v][p]) {
                        g.connect(u, v);
                        break;
                    }
        return g;
    }

    std::size_t size() const noexcept { return n_; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[(u - 1) * n_ + (v - 1)] != 0; }

    std::size_t degree(Vertex v) const {
        std::size_t d = 0;
        for (Vertex u = 1; u <= n_; ++u) d += adjacent(u, v);
        return d;
    }

    std::vector<Vertex> neighborhood(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex u = 1; u <= n_; ++u)
            if (adjacent(u, v)) out.push_back(u);
        return out;
    }

    // dist[v] from u, `unreachable` if none; index 0 unused.
    std::vector<std::size_t> distances(Vertex u) const {
        std::vector<std::size_t> dist(n_ + 1, unreachable);
        std::deque<Vertex> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y = 1; y <= n_; ++y)
                if (adjacent(x, y) && dist[y] == unreachable) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return dist;
    }

    std::size_t distance(Vertex u, Vertex v) const { return distances(u)[v]; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void connect(Vertex u, Vertex v) { adj_[(u - 1) * n_ + (v - 1)] = adj_[(v - 1) * n_ + (u - 1)] = 1; }

    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

// Unit-weight interval scheduling DP over intervals sorted by right endpoint.
inline std::size_t mis_size(const IntervalRealization& real) {
    const std::size_t n = real.size();
    if (n > dp_limit) throw range_error("oracle MIS limited to n <= " + std::to_string(dp_limit));
    std::vector<Endpoints> iv(real.intervals().begin(), real.intervals().end());
    std::sort(iv.begin(), iv.end(), [](auto a, auto b) { return a.r < b.r; });
    std::vector<std::size_t> best(n + 1, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        // last interval ending strictly before iv[j-1] starts
        std::size_t p = j - 1;
        while (p > 0 && iv[p - 1].r >= iv[j - 1].l) --p;
        best[j] = std::max(best[j - 1], best[p] + 1);
    }
    return best[n];
}

namespace detail {
inline void require_small(const Graph& g, const char* what) {
    if (g.size() > exhaustive_limit)
        throw range_error(std::string("exhaustive ") + what + " limited to n <= " + std::to_string(exhaustive_limit));
}

inline std::vector<std::uint32_t> masks(const Graph& g) {
    std::vector<std::uint32_t> m(g.size(), 0);
    for (Vertex u = 1; u <= g.size(); ++u)
        for (Vertex v = 1; v <= g.size(); ++v)
            if (g.adjacent(u, v)) m[u - 1] |= std::uint32_t{1} << (v - 1);
    return m;
}
}  // namespace detail

inline std::size_t mis_size_exhaustive(const Graph& g) {
    detail::require_small(g, "MIS");
    const auto nb = detail::masks(g);
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
            if ((s >> v & 1u) && (nb[v] & s)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    return best;
}

inline std::size_t clique_size_exhaustive(const Graph& g) {
    detail::require_small(g, "clique");
    const auto nb = detail::masks(g);
    const std::size_t n = g.size();
    std::size_t best = 0;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
            if ((s >> v & 1u) && ((nb[v] | (std::uint32_t{1} << v)) & s) != s) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
    return best;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (set[a] == set[b] || g.adjacent(set[a], set[b])) return false;
    return true;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!g.adjacent(set[a], set[b])) return false;
    return true;
}

inline bool is_permutation(std::size_t n, std::span<const Vertex> order) {
    if (order.size() != n) return false;
    std::vector<bool> seen(n + 1, false);
    for (Vertex v : order) {
        if (v == 0 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// Every vertex's neighbors placed before it form a clique.
inline bool is_peo(const Graph& g, std::span<const Vertex> order) {
    if (!is_permutation(g.size(), order)) return false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<Vertex> earlier;
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(order[i], order[j])) earlier.push_back(order[j]);
        if (!is_clique(g, earlier)) return false;
    }
    return true;
}

// Stack simulation: after popping exhausted vertices, the next vertex must be
// a neighbor of the stack top, or the stack is empty (new component).
inline bool is_dfs_order(const Graph& g, std::span<const Vertex> order) {
    if (!is_permutation(g.size(), order)) return false;
    std::vector<bool> seen(g.size() + 1, false);
    auto exhausted = [&](Vertex x) {
        for (Vertex y = 1; y <= g.size(); ++y)
            if (!seen[y] && g.adjacent(x, y)) return false;
        return true;
    };
    std::vector<Vertex> stack;
    for (Vertex x : order) {
        while (!stack.empty() && exhausted(stack.back())) stack.pop_back();
        if (!stack.empty() && !g.adjacent(stack.back(), x)) return false;
        seen[x] = true;
        stack.push_back(x);
    }
    return true;
}

// Queue simulation: the next vertex must be a neighbor of the earliest
// discovered vertex that still has undiscovered neighbors, or start a new
// component when there is none.
inline bool is_bfs_order(const Graph& g, std::span<const Vertex> order) {
    if (!is_permutation(g.size(), order)) return false;
    std::vector<bool> seen(g.size() + 1, false);
    auto exhausted = [&](Vertex x) {
        for (Vertex y = 1; y <= g.size(); ++y)
            if (!seen[y] && g.adjacent(x, y)) return false;
        return true;
    };
    std::size_t head = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        while (head < i && exhausted(order[head])) ++head;
        if (head < i && !g.adjacent(order[head], order[i])) return false;
        seen[order[i]] = true;
    }
    return true;
}

inline bool is_proper_coloring(const Graph& g, std::span<const std::size_t> colors) {
    if (colors.size() != g.size()) return false;
    for (Vertex u = 1; u <= g.size(); ++u) {
        if (colors[u - 1] == 0) return false;
        for (Vertex v = u + 1; v <= g.size(); ++v)
            if (g.adjacent(u, v) && colors[u - 1] == colors[v - 1]) return false;
    }
    return true;
}

// Largest number of intervals sharing a point.
inline std::size_t max_overlap(const IntervalRealization& real) {
    std::size_t best = 0;
    for (std::uint64_t p = 1; p <= 2 * real.size(); ++p) {
        std::size_t c = 0;
        for (const auto& iv : real.intervals()) c += iv.l <= p && p <= iv.r;
        best = std::max(best, c);
    }
    return best;
}

}  // namespace sig::oracle
