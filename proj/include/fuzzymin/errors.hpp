#ifndef FUZZYMIN_ERRORS_HPP
#define FUZZYMIN_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuzzymin {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different chains.
class ChainMismatch : public Error {
public:
  ChainMismatch() : Error("operands are defined over different chains") {}
  explicit ChainMismatch(const std::string& what) : Error(what) {}
};

/// Matrix or vector shapes are not conformable.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed input: bad value, unknown symbol, out-of-range index, broken document.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// An enumeration or a set grew past its configured ceiling.
///
/// `count` is the size that was about to be processed (saturated at
/// UINT64_MAX when it does not fit), `limit` the ceiling that stopped it.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(const std::string& what, std::uint64_t count, std::uint64_t limit)
      : Error(what + " (" + std::to_string(count) + " > " + std::to_string(limit) + ")"),
        count_(count),
        limit_(limit) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t count_;
  std::uint64_t limit_;
};

/// Interval-solution set size passed the solver's cap.
class SizeExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// Candidate enumeration for the minimizer is too large.
class EnumerationBudgetExceeded : public BudgetExceeded {
public:
  using BudgetExceeded::BudgetExceeded;
};

/// A boolean view was requested for an automaton with values other than 0 and 1.
class NonBooleanValue : public Error {
public:
  using Error::Error;
};

namespace detail {

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > UINT64_MAX - b) ? UINT64_MAX : a + b;
}

inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = sat_mul(r, base);
    if (r == UINT64_MAX || r == 0) break;
  }
  return r;
}

}  // namespace detail
}  // namespace fuzzymin

#endif  // FUZZYMIN_ERRORS_HPP
