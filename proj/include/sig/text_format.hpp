#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sig/error.hpp"
#include "sig/realization.hpp"

// Plain-text realizations:
//
//   interval <n>        circular <n>
//   <left> <right>      <start> <end>
//   ...                 ...
//
// Blank lines and lines starting with '#' are ignored. Coordinates are
// integers or decimals before normalization.
namespace sig::text {

struct IntervalInput {
    std::vector<RawInterval> intervals;
};

struct ArcInput {
    std::vector<RawArc> arcs;
};

using Input = std::variant<IntervalInput, ArcInput>;

namespace detail {
inline double number(const std::string& tok, std::size_t line) {
    double x = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw parse_error(line, "not a number: '" + tok + "'");
    return x;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}
}  // namespace detail

inline Input read(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto next = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            auto t = detail::tokens(line);
            if (t.empty() || t[0][0] == '#') continue;
            return t;
        }
        return {};
    };
    const auto head = next();
    if (head.empty()) throw parse_error(lineno, "empty input");
    if (head.size() != 2 || (head[0] != "interval" && head[0] != "circular"))
        throw parse_error(lineno, "expected 'interval <n>' or 'circular <n>'");
    std::size_t n = 0;
    const auto [p, ec] = std::from_chars(head[1].data(), head[1].data() + head[1].size(), n);
    if (ec != std::errc{} || p != head[1].data() + head[1].size() || n == 0)
        throw parse_error(lineno, "bad vertex count '" + head[1] + "'");
    const bool arcs = head[0] == "circular";
    IntervalInput iv;
    ArcInput ac;
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = next();
        if (t.empty()) throw parse_error(lineno, "expected " + std::to_string(n) + " entries, got " + std::to_string(i));
        if (t.size() != 2) throw parse_error(lineno, "expected two coordinates");
        const double a = detail::number(t[0], lineno), b = detail::number(t[1], lineno);
        if (arcs) ac.arcs.push_back({a, b});
        else iv.intervals.push_back({a, b});
    }
    if (!next().empty()) throw parse_error(lineno, "more entries than the header announces");
    if (arcs) return ac;
    return iv;
}

inline void write(std::ostream& out, const IntervalRealization& real) {
    out << "interval " << real.size() << '\n';
    for (const auto& e : real.intervals()) out << e.l << ' ' << e.r << '\n';
}

inline void write(std::ostream& out, const ArcRealization& arcs) {
    out << "circular " << arcs.size() << '\n';
    for (const auto& e : arcs.arcs()) out << e.l << ' ' << e.r << '\n';
}

}  // namespace sig::text
