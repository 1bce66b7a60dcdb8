#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "sig/realization.hpp"
#include "sig/serialize.hpp"

namespace fixtures {

// Nine intervals, 2-proper, clique number 4.
inline sig::IntervalRealization nine_intervals() {
    return sig::IntervalRealization(
        {{1, 6}, {2, 5}, {3, 9}, {4, 8}, {7, 12}, {10, 18}, {11, 15}, {13, 17}, {14, 16}});
}

// Seven arcs on positions 1..14, arcs 4 and 7 wrap past the origin.
inline sig::ArcRealization seven_arcs() {
    return sig::ArcRealization({{1, 3}, {4, 7}, {5, 8}, {6, 2}, {9, 14}, {11, 12}, {13, 10}});
}

template <class T>
std::string bytes(const T& x) {
    std::ostringstream out;
    sig::io::Writer w(out);
    x.save(w);
    return out.str();
}

template <class T>
T reload(const std::string& s) {
    std::istringstream in(s);
    sig::io::Reader r(in);
    return T::load(r);
}

}  // namespace fixtures
