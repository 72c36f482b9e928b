#pragma once

#include <stdexcept>
#include <string>

namespace symtree {

// Bad arguments or structurally invalid inputs (k < 2, palette mismatch, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A search or construction hit its configured resource limit before finishing.
// `partial` carries the best bound established so far (-1 if none).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what, long long partial = -1)
        : std::runtime_error(what), partial_(partial) {}

    long long partial() const noexcept { return partial_; }

private:
    long long partial_;
};

}  // namespace symtree
