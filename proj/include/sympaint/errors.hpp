#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympaint {

// Malformed input text (graph6, edge lists, family strings). Carries the
// byte offset of the first offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Arguments outside an operation's stated domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search or enumeration whose projected size exceeds the configured
// budget. Callers either retry with a larger budget or fall back to
// chain-based queries.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sympaint
