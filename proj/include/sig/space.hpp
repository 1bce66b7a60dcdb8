#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sig {

// Per-component bit counts of a structure; total() is their sum.
struct SpaceReport {
    std::vector<std::pair<std::string, std::uint64_t>> components;

    void add(std::string name, std::uint64_t bits) { components.emplace_back(std::move(name), bits); }

    std::uint64_t total() const noexcept {
        std::uint64_t t = 0;
        for (const auto& c : components) t += c.second;
        return t;
    }

    std::uint64_t get(const std::string& name) const {
        for (const auto& c : components)
            if (c.first == name) return c.second;
        return 0;
    }
};

}  // namespace sig
