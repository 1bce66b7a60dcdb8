#pragma once

#include <stdexcept>
#include <string>

namespace sig {

// Position, rank or vertex argument outside the valid domain.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// select for a rank that does not exist.
class not_found_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Realization violates the requirements of the structure being built
// (malformed endpoints, nesting under a proper build, full-circle arcs...).
class realization_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class not_proper_error : public realization_error {
public:
    not_proper_error(std::size_t outer, std::size_t inner)
        : realization_error("interval " + std::to_string(inner) + " is nested inside interval " +
                            std::to_string(outer)),
          outer_(outer),
          inner_(inner) {}

    std::size_t outer() const noexcept { return outer_; }
    std::size_t inner() const noexcept { return inner_; }

private:
    std::size_t outer_;
    std::size_t inner_;
};

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Corrupt or incompatible binary serialization.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sig
