/*
 * errors.hpp
 * ----------
 * Exception types shared across the library. Each maps to one error
 * condition named in the operation contracts; all derive from
 * std::runtime_error so callers can catch coarsely or finely.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace fc {

struct RankError : std::runtime_error {
    explicit RankError(const std::string& m) : std::runtime_error(m) {}
};
struct AlphabetError : std::runtime_error {
    explicit AlphabetError(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : std::runtime_error {
    // position: index of the offending token, 0-based
    size_t position;
    ParseError(const std::string& m, size_t pos) : std::runtime_error(m), position(pos) {}
};
struct NotReducedError : std::runtime_error {
    explicit NotReducedError(const std::string& m) : std::runtime_error(m) {}
};
struct NotFCError : std::runtime_error {
    explicit NotFCError(const std::string& m) : std::runtime_error(m) {}
};
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};
struct IntervalError : std::runtime_error {
    explicit IntervalError(const std::string& m) : std::runtime_error(m) {}
};
struct InvalidFormError : std::runtime_error {
    explicit InvalidFormError(const std::string& m) : std::runtime_error(m) {}
};
struct SystemMismatchError : std::runtime_error {
    explicit SystemMismatchError(const std::string& m) : std::runtime_error(m) {}
};
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace fc
