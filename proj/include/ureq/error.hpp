#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ureq {

/// Invalid vertex ids, invalid matchings and other contract violations on graph inputs.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Edge-list text that cannot be read. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Malformed graph6 bytes.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact solver refused or aborted a search because of its budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input is outside the domain an algorithm is defined on (e.g. not subcubic).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace ureq
