#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlang {

/// Malformed input: regex text, graph files, word arguments.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_ = 0;
};

/// A configured cap was exceeded (piece counts, search budgets, vertex caps).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphlang
