#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gcdheight {

enum class ErrorKind {
    Syntax,              // malformed polynomial / ideal / certificate text
    Domain,              // precondition violated by the caller
    EmptySubscheme,
    WindowInstability,
    InvalidProfile,      // codimension < 2 or degY < 1
    BudgetExhausted,
    InconsistentProfile,
    AllExcluded,
    Io,
};

/// Base exception of the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Syntax, what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised by the certificate search when no (m, r) in the budget box passes
/// the dimension criterion. Carries the best slope seen, if any.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, std::optional<std::pair<int, int>> best)
        : Error(ErrorKind::BudgetExhausted, what), best_(best) {}
    const std::optional<std::pair<int, int>>& best() const noexcept { return best_; }

private:
    std::optional<std::pair<int, int>> best_;
};

}  // namespace gcdheight
