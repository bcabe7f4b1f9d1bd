#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crystal {

/// Syntax error in a textual input; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Graph generation exceeded its node budget.
class NodeLimitError : public std::runtime_error {
public:
    explicit NodeLimitError(std::size_t limit)
        : std::runtime_error("node limit exceeded: " + std::to_string(limit)),
          limit_(limit) {}

    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
};

/// Two crystal graphs admit no canonical isomorphism; the message names the
/// first operator string where they disagree.
class IsoError : public std::runtime_error {
public:
    explicit IsoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace crystal
