#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sig/realization.hpp"

// Random realizations for tests, `verify` and `bench`.
namespace sig::random {

// A uniformly random pairing of {1..2n} into n intervals.
template <class Rng>
IntervalRealization intervals(std::size_t n, Rng& rng) {
    std::vector<std::uint64_t> pos(2 * n);
    std::iota(pos.begin(), pos.end(), std::uint64_t{1});
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<Endpoints> iv(n);
    for (std::size_t i = 0; i < n; ++i) iv[i] = {std::min(pos[2 * i], pos[2 * i + 1]), std::max(pos[2 * i], pos[2 * i + 1])};
    return IntervalRealization(std::move(iv));
}

// Intervals of length at most max_len at random offsets in [0, span): sparse
// enough to give several components.
template <class Rng>
IntervalRealization short_intervals(std::size_t n, double span, double max_len, Rng& rng) {
    std::uniform_real_distribution<double> start(0.0, span), len(0.0, max_len);
    std::vector<RawInterval> raw(n);
    for (auto& iv : raw) {
        iv.left = start(rng);
        iv.right = iv.left + len(rng);
    }
    return normalize(std::span<const RawInterval>(raw));
}

// Random left/right sequence with a nonnegative running balance; the j-th left
// endpoint pairs with the j-th right one, so no interval nests in another.
template <class Rng>
IntervalRealization proper_intervals(std::size_t n, Rng& rng) {
    std::vector<Endpoints> iv(n);
    std::size_t lefts = 0, rights = 0;
    std::bernoulli_distribution coin(0.5);
    for (std::uint64_t p = 1; p <= 2 * n; ++p) {
        const bool open = lefts < n && (lefts == rights || coin(rng));
        if (open) iv[lefts++].l = p;
        else iv[rights++].r = p;
    }
    return IntervalRealization(std::move(iv));
}

// A random pairing of 2n distinct circle positions, each pair oriented at
// random.
template <class Rng>
ArcRealization arcs(std::size_t n, Rng& rng) {
    std::vector<std::uint64_t> pos(2 * n);
    std::iota(pos.begin(), pos.end(), std::uint64_t{1});
    std::shuffle(pos.begin(), pos.end(), rng);
    std::bernoulli_distribution flip(0.5);
    std::vector<RawArc> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto a = static_cast<double>(pos[2 * i]), b = static_cast<double>(pos[2 * i + 1]);
        if (flip(rng)) std::swap(a, b);
        raw[i] = {a, b};
    }
    return normalize_arcs(raw);
}

// Short arcs scattered around a circle of circumference 1; sparse instances
// can be disconnected.
template <class Rng>
ArcRealization short_arcs(std::size_t n, double max_len, Rng& rng) {
    std::uniform_real_distribution<double> start(0.0, 1.0), len(0.0, max_len);
    std::vector<RawArc> raw(n);
    for (auto& a : raw) {
        a.start = start(rng);
        a.end = a.start + len(rng);
        if (a.end >= 1.0) a.end -= 1.0;
    }
    return normalize_arcs(raw);
}

}  // namespace sig::random
