#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sig/error.hpp"

namespace sig {

using Vertex = std::size_t;  // 1-based label

struct Endpoints {
    std::uint64_t l;
    std::uint64_t r;
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct RawInterval {
    double left;
    double right;
};

// n closed intervals whose 2n endpoints are exactly {1..2n}, labeled by
// increasing left endpoint.
class IntervalRealization {
public:
    IntervalRealization() = default;

    // Takes intervals already on {1..2n}; relabels them by left endpoint.
    explicit IntervalRealization(std::vector<Endpoints> intervals) {
        std::vector<std::size_t> order(intervals.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return intervals[a].l < intervals[b].l; });
        for (auto i : order) intervals_.push_back(intervals[i]);
        source_ = std::move(order);
        validate();
    }

    std::size_t size() const noexcept { return intervals_.size(); }
    const Endpoints& operator[](Vertex v) const { return intervals_.at(v - 1); }
    std::span<const Endpoints> intervals() const noexcept { return intervals_; }

    // 0-based index of the input interval that became vertex v.
    std::size_t source_index(Vertex v) const { return source_.at(v - 1); }

    friend bool operator==(const IntervalRealization& a, const IntervalRealization& b) {
        return a.intervals_ == b.intervals_;
    }

private:
    void validate() const {
        const std::size_t n = intervals_.size();
        if (n == 0) throw realization_error("realization has no intervals");
        std::vector<bool> used(2 * n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [l, r] = intervals_[i];
            if (l < 1 || r > 2 * n || l >= r)
                throw realization_error("interval " + std::to_string(i + 1) + " = [" + std::to_string(l) + "," +
                                        std::to_string(r) + "] is not a valid interval on 1.." + std::to_string(2 * n));
            if (used[l] || used[r]) throw realization_error("endpoint reused by interval " + std::to_string(i + 1));
            used[l] = used[r] = true;
        }
    }

    std::vector<Endpoints> intervals_;
    std::vector<std::size_t> source_;
};

// Order-isomorphic realization on {1..2n} with the same closed-interval
// intersection graph. At equal coordinates left endpoints come before right
// endpoints, so touching intervals stay adjacent; remaining ties go by input
// order.
inline IntervalRealization normalize(std::span<const RawInterval> raw) {
    if (raw.empty()) throw realization_error("no intervals given");
    struct Event {
        double x;
        int kind;  // 0 = left, 1 = right
        std::size_t id;
    };
    std::vector<Event> ev;
    ev.reserve(2 * raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto [a, b] = raw[i];
        if (std::isnan(a) || std::isnan(b)) throw realization_error("interval " + std::to_string(i + 1) + " has a NaN endpoint");
        if (a > b) throw realization_error("interval " + std::to_string(i + 1) + " has left > right");
        ev.push_back({a, 0, i});
        ev.push_back({b, 1, i});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& p, const Event& q) {
        if (p.x != q.x) return p.x < q.x;
        if (p.kind != q.kind) return p.kind < q.kind;
        return p.id < q.id;
    });
    std::vector<Endpoints> pos(raw.size());
    for (std::size_t k = 0; k < ev.size(); ++k) (ev[k].kind == 0 ? pos[ev[k].id].l : pos[ev[k].id].r) = k + 1;
    return IntervalRealization(std::move(pos));
}

inline IntervalRealization normalize(std::span<const std::pair<double, double>> raw) {
    std::vector<RawInterval> v;
    v.reserve(raw.size());
    for (auto [a, b] : raw) v.push_back({a, b});
    return normalize(std::span<const RawInterval>(v));
}

struct RawArc {
    double start;
    double end;  // the arc runs clockwise from start to end
};

// n arcs on a circle mapped to endpoint positions {1..2n} by a clockwise
// traversal starting at the anchor arc's start; labels follow start order, so
// l_1 = 1. Arc v is reversed when r_v < l_v (it passes the traversal origin).
class ArcRealization {
public:
    ArcRealization() = default;

    explicit ArcRealization(std::vector<Endpoints> arcs) {
        std::vector<std::size_t> order(arcs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return arcs[a].l < arcs[b].l; });
        for (auto i : order) arcs_.push_back(arcs[i]);
        source_ = std::move(order);
        validate();
    }

    std::size_t size() const noexcept { return arcs_.size(); }
    const Endpoints& operator[](Vertex v) const { return arcs_.at(v - 1); }
    std::span<const Endpoints> arcs() const noexcept { return arcs_; }
    bool reversed(Vertex v) const { return (*this)[v].r < (*this)[v].l; }
    std::size_t source_index(Vertex v) const { return source_.at(v - 1); }

    friend bool operator==(const ArcRealization& a, const ArcRealization& b) { return a.arcs_ == b.arcs_; }

private:
    void validate() const {
        const std::size_t n = arcs_.size();
        if (n == 0) throw realization_error("realization has no arcs");
        std::vector<bool> used(2 * n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [l, r] = arcs_[i];
            if (l < 1 || l > 2 * n || r < 1 || r > 2 * n || l == r)
                throw realization_error("arc " + std::to_string(i + 1) + " has endpoints outside 1.." + std::to_string(2 * n));
            if (used[l] || used[r]) throw realization_error("endpoint reused by arc " + std::to_string(i + 1));
            used[l] = used[r] = true;
        }
        if (arcs_[0].l != 1) throw realization_error("the first arc must start at position 1");
    }

    std::vector<Endpoints> arcs_;
    std::vector<std::size_t> source_;
};

// anchor: 0-based input index of the arc that gets label 1; defaults to the
// arc with the smallest start coordinate. All 2n coordinates must be distinct;
// an arc with start == end would cover the whole circle and is rejected.
inline ArcRealization normalize_arcs(std::span<const RawArc> raw, std::optional<std::size_t> anchor = std::nullopt) {
    if (raw.empty()) throw realization_error("no arcs given");
    struct Event {
        double x;
        bool start;
        std::size_t id;
    };
    std::vector<Event> ev;
    ev.reserve(2 * raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto [s, e] = raw[i];
        if (std::isnan(s) || std::isnan(e)) throw realization_error("arc " + std::to_string(i + 1) + " has a NaN endpoint");
        if (s == e) throw realization_error("arc " + std::to_string(i + 1) + " covers the entire circle");
        ev.push_back({s, true, i});
        ev.push_back({e, false, i});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& p, const Event& q) { return p.x < q.x; });
    for (std::size_t k = 1; k < ev.size(); ++k)
        if (ev[k].x == ev[k - 1].x)
            throw realization_error("duplicate endpoint coordinate " + std::to_string(ev[k].x) + " (arcs " +
                                    std::to_string(ev[k - 1].id + 1) + " and " + std::to_string(ev[k].id + 1) + ")");
    std::size_t a = 0;
    if (anchor) {
        if (*anchor >= raw.size()) throw range_error("anchor arc " + std::to_string(*anchor + 1) + " does not exist");
        a = *anchor;
    } else {
        for (std::size_t i = 1; i < raw.size(); ++i)
            if (raw[i].start < raw[a].start) a = i;
    }
    const auto origin = static_cast<std::size_t>(
        std::find_if(ev.begin(), ev.end(), [&](const Event& e) { return e.start && e.id == a; }) - ev.begin());
    std::vector<Endpoints> pos(raw.size());
    for (std::size_t k = 0; k < ev.size(); ++k) {
        const Event& e = ev[(origin + k) % ev.size()];
        (e.start ? pos[e.id].l : pos[e.id].r) = k + 1;
    }
    return ArcRealization(std::move(pos));
}

}  // namespace sig
