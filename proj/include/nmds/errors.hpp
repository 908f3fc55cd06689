#pragma once

#include <stdexcept>
#include <string>

namespace nmds {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Division or inversion by the zero element.
struct division_by_zero : error {
    explicit division_by_zero(const std::string& what = "division by zero") : error(what) {}
};

// Operands belong to different fields.
struct field_mismatch : error {
    explicit field_mismatch(const std::string& what) : error(what) {}
};

// Malformed code/field spec string or invalid parameters.
struct spec_parse_error : error {
    explicit spec_parse_error(const std::string& what) : error(what) {}
};

// An enumeration would exceed the configured budget.
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

// A runtime cross-check of an algebraic identity failed, which signals
// inconsistent inputs (e.g. a minimal-polynomial coefficient landing
// outside the base field, or a non-integral MacWilliams intermediate).
struct consistency_error : error {
    explicit consistency_error(const std::string& what) : error(what) {}
};

// A structural guarantee of the underlying theory was contradicted by
// the computation. Tests must never observe this.
struct theorem_violation : error {
    explicit theorem_violation(const std::string& what) : error(what) {}
};

}  // namespace nmds
