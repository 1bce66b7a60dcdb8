#pragma once

// Little-endian binary encoding shared by every serializable structure.
// A structure record is: 4-byte ASCII tag, 1 version byte, then payload.
// Variable-length components are prefixed by their u64 length.

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sig/error.hpp"

namespace sig::io {

inline constexpr std::uint8_t format_version = 1;

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }

    void u64(std::uint64_t v) {
        std::array<char, 8> buf{};
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
        out_.write(buf.data(), buf.size());
    }

    void words(const std::vector<std::uint64_t>& w) {
        u64(w.size());
        for (auto x : w) u64(x);
    }

    void header(std::string_view tag) {
        out_.write(tag.data(), 4);
        u8(format_version);
    }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::uint8_t u8() {
        char c;
        if (!in_.get(c)) throw format_error("unexpected end of input");
        return static_cast<std::uint8_t>(c);
    }

    std::uint64_t u64() {
        std::array<char, 8> buf{};
        if (!in_.read(buf.data(), buf.size())) throw format_error("unexpected end of input");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t{static_cast<unsigned char>(buf[i])} << (8 * i);
        return v;
    }

    std::vector<std::uint64_t> words(std::uint64_t max_words) {
        std::uint64_t n = u64();
        if (n > max_words) throw format_error("component length exceeds declared size");
        std::vector<std::uint64_t> w(n);
        for (auto& x : w) x = u64();
        return w;
    }

    std::string peek_tag() {
        std::array<char, 4> t{};
        auto pos = in_.tellg();
        if (!in_.read(t.data(), t.size())) throw format_error("missing structure tag");
        in_.seekg(pos);
        return std::string(t.data(), t.size());
    }

    void header(std::string_view tag) {
        std::array<char, 4> t{};
        if (!in_.read(t.data(), t.size())) throw format_error("missing structure tag");
        if (std::string_view(t.data(), 4) != tag)
            throw format_error("expected tag " + std::string(tag) + ", found " + std::string(t.data(), 4));
        auto v = u8();
        if (v != format_version)
            throw format_error("unsupported version " + std::to_string(v) + " for " + std::string(tag));
    }

private:
    std::istream& in_;
};

}  // namespace sig::io
