#pragma once

#include <stdexcept>
#include <string>

namespace linkcob {

// Violated precondition or malformed value (dimension mismatch, bad epsilon, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation refused to run because an explicit resource bound was exceeded.
// Distinct from any mathematical verdict.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or JSON document.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linkcob
