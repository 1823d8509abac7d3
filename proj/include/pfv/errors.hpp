#pragma once

#include <stdexcept>
#include <string>

namespace pfv {

// Invalid mathematical input (zero polynomial where nonzero required, k < 2, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or lifting stage exceeded its configured point budget.
// Callers surface this as exit code 3 at the CLI.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Expression-text parse failure; `position` is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace pfv
