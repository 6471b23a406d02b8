#pragma once

#include <stdexcept>

namespace contractforge {

// Instance passed to the DP path does not satisfy increasing differences.
struct NotIncreasingDifferences : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested enumeration is larger than the configured assignment budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Piecewise cost rejected at construction (coverage, sign, or attainment).
struct InvalidCost : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Step payment whose breakpoints do not match the reduction's z-grid.
struct MisalignedStep : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NAE3SAT input that is structurally broken (header, arity, variable range).
struct InvalidFormula : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Assignment handed to witness_payments does not NAE-satisfy the formula.
struct NotNaeSatisfying : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace contractforge
