#ifndef FUZZYMIN_BUDGET_HPP
#define FUZZYMIN_BUDGET_HPP

#include <cstdint>

namespace fuzzymin {

/// Ceilings that turn the exponential worst cases into reportable failures.
struct Budgets {
  /// Candidate automata the minimizer may enumerate (|V|^var_count).
  std::uint64_t candidates = 10'000'000;
  /// Distinct suffix vectors in one equivalence fixpoint.
  std::uint64_t phi = 1'000'000;
  /// Interval vectors in one solution set.
  std::uint64_t vectors = 1'000'000;
  /// Word-length bounds and materialized equation counts for the oracle paths.
  std::uint64_t words = 10'000'000;
};

}  // namespace fuzzymin

#endif  // FUZZYMIN_BUDGET_HPP
