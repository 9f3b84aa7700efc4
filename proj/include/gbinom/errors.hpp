#pragma once

#include <stdexcept>

namespace gbinom {

// Operation is well-formed but not supported for the given shape
// (e.g. a hypergeometric form that only exists for two species).
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused because the instance exceeds its budget.
// Enumerators never return partial counts.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A denominator Pochhammer symbol vanishes inside the summation range.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace gbinom
