#ifndef FUZZYMIN_SFPE_HPP
#define FUZZYMIN_SFPE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fuzzymin/budget.hpp"
#include "fuzzymin/chain.hpp"

namespace fuzzymin {

/// Conjunction x_{i1} ∧ … ∧ x_{ik} of distinct variables (unit coefficient).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<std::size_t> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    if (vars_.empty()) throw InvalidInput("a monomial needs at least one variable");
  }
  Monomial(std::initializer_list<std::size_t> vars) : Monomial(std::vector<std::size_t>(vars)) {}

  const std::vector<std::size_t>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::size_t> vars_;
};

/// Disjunction M_1 ∨ … ∨ M_k of monomials; duplicates are dropped on construction.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    std::sort(monomials_.begin(), monomials_.end());
    monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
    if (monomials_.empty()) throw InvalidInput("a polynomial needs at least one monomial");
  }
  Polynomial(std::initializer_list<Monomial> monomials) : Polynomial(std::vector<Monomial>(monomials)) {}

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }

  /// Largest variable index + 1.
  std::size_t min_vars() const {
    std::size_t n = 0;
    for (const auto& m : monomials_) n = std::max(n, m.vars().back() + 1);
    return n;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Monomial> monomials_;
};

enum class Relation { EQ, LE };

struct Equation {
  Polynomial lhs;
  Relation relation = Relation::EQ;
  ChainValue rhs{};

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// A system P_i ⋈ a_i over variables x_0 … x_{n_vars-1}.
class EquationSystem {
public:
  EquationSystem(Chain chain, std::size_t n_vars, std::vector<Equation> equations)
      : chain_(std::move(chain)), n_vars_(n_vars), equations_(std::move(equations)) {
    for (const auto& e : equations_) {
      chain_.check(e.rhs);
      if (e.lhs.min_vars() > n_vars_)
        throw InvalidInput("equation uses variable " + std::to_string(e.lhs.min_vars()) + " but the system declares " +
                           std::to_string(n_vars_));
    }
  }

  const Chain& chain() const noexcept { return chain_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  const std::vector<Equation>& equations() const noexcept { return equations_; }

  bool all_equalities() const {
    return std::all_of(equations_.begin(), equations_.end(), [](const Equation& e) { return e.relation == Relation::EQ; });
  }

  /// Distinct right-hand sides, ascending.
  std::vector<ChainValue> rhs_values() const {
    std::set<ChainValue> v;
    for (const auto& e : equations_) v.insert(e.rhs);
    return {v.begin(), v.end()};
  }

  /// Largest number of monomials in one equation.
  std::size_t max_monomials() const {
    std::size_t k = 0;
    for (const auto& e : equations_) k = std::max(k, e.lhs.size());
    return k;
  }

  friend bool operator==(const EquationSystem&, const EquationSystem&) = default;

private:
  Chain chain_;
  std::size_t n_vars_;
  std::vector<Equation> equations_;
};

struct PointAssignment {
  std::vector<ChainValue> values;
  friend bool operator==(const PointAssignment&, const PointAssignment&) = default;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

inline ChainValue eval_monomial(const Monomial& m, const std::vector<ChainValue>& x) {
  ChainValue acc(0xFFFF);
  for (auto v : m.vars()) {
    if (v >= x.size()) throw InvalidInput("variable index " + std::to_string(v) + " out of range");
    acc = meet(acc, x[v]);
  }
  return acc;
}

inline ChainValue eval_polynomial(const Polynomial& p, const PointAssignment& x) {
  ChainValue acc{};
  for (const auto& m : p.monomials()) acc = join(acc, eval_monomial(m, x.values));
  return acc;
}

inline bool satisfies(const Equation& e, const PointAssignment& x) {
  ChainValue v = eval_polynomial(e.lhs, x);
  return e.relation == Relation::EQ ? v == e.rhs : v <= e.rhs;
}

inline bool satisfies(const EquationSystem& sys, const PointAssignment& x) {
  if (x.values.size() != sys.n_vars()) return false;
  return std::all_of(sys.equations().begin(), sys.equations().end(), [&](const Equation& e) { return satisfies(e, x); });
}

// ---------------------------------------------------------------------------
// Interval solutions
// ---------------------------------------------------------------------------

/// Size bookkeeping of an interval-solver run, for checking the counting bounds.
struct SolveStats {
  struct Factor {
    std::size_t monomials = 0;  ///< k of the equation
    std::size_t size = 0;       ///< |T_i|
  };
  struct Step {
    std::size_t left = 0, right = 0, result = 0;
  };
  std::vector<Factor> factors;
  std::vector<Step> steps;
};

namespace detail {

inline SolutionSet checked_star(const SolutionSet& a, const SolutionSet& b, const Budgets& budget, SolveStats* stats) {
  SolutionSet r = star_product(a, b);
  if (stats) stats->steps.push_back({a.size(), b.size(), r.size()});
  if (r.size() > budget.vectors)
    throw SizeExceeded("interval solution set grew past the vector budget", r.size(), budget.vectors);
  return r;
}

inline void check_monomial(const Monomial& m, std::size_t n_vars) {
  if (m.vars().back() >= n_vars) throw InvalidInput("monomial variable out of range");
}

}  // namespace detail

/// Interval solutions of m = a: for each variable of m, that coordinate is
/// [a,a], the other variables of m get [a,1], the rest [0,1].
inline SolutionSet monomial_eq_solutions(const Monomial& m, ChainValue a, std::size_t n_vars, const Chain& chain) {
  chain.check(a);
  detail::check_monomial(m, n_vars);
  std::vector<IntervalVector> out;
  for (auto pinned : m.vars()) {
    IntervalVector v = IntervalVector::full(n_vars, chain);
    for (auto x : m.vars()) v[x] = Interval(a, chain.top());
    v[pinned] = Interval::point(a);
    out.push_back(std::move(v));
  }
  return SolutionSet(n_vars, std::move(out));
}

/// Interval solutions of m ≤ a: one variable of m in [0,a], everything else [0,1].
inline SolutionSet monomial_le_solutions(const Monomial& m, ChainValue a, std::size_t n_vars, const Chain& chain) {
  chain.check(a);
  detail::check_monomial(m, n_vars);
  std::vector<IntervalVector> out;
  for (auto pinned : m.vars()) {
    IntervalVector v = IntervalVector::full(n_vars, chain);
    v[pinned] = Interval(chain.bottom(), a);
    out.push_back(std::move(v));
  }
  return SolutionSet(n_vars, std::move(out));
}

/// Interval solutions of p = a: the union over i of the case
/// {M_i = a, M_j ≤ a for j ≠ i}, each case solved by ⋆-products.
inline SolutionSet polynomial_eq_solutions(const Polynomial& p, ChainValue a, std::size_t n_vars, const Chain& chain,
                                           const Budgets& budget = {}, SolveStats* stats = nullptr) {
  SolutionSet result(n_vars);
  const auto& ms = p.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    SolutionSet acc = monomial_eq_solutions(ms[i], a, n_vars, chain);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j == i) continue;
      acc = detail::checked_star(acc, monomial_le_solutions(ms[j], a, n_vars, chain), budget, stats);
    }
    result.merge(acc);
    if (result.size() > budget.vectors)
      throw SizeExceeded("interval solution set grew past the vector budget", result.size(), budget.vectors);
  }
  return result;
}

/// Interval solutions of p ≤ a: every monomial ≤ a.
inline SolutionSet polynomial_le_solutions(const Polynomial& p, ChainValue a, std::size_t n_vars, const Chain& chain,
                                           const Budgets& budget = {}, SolveStats* stats = nullptr) {
  const auto& ms = p.monomials();
  SolutionSet acc = monomial_le_solutions(ms.front(), a, n_vars, chain);
  for (std::size_t j = 1; j < ms.size(); ++j)
    acc = detail::checked_star(acc, monomial_le_solutions(ms[j], a, n_vars, chain), budget, stats);
  return acc;
}

inline SolutionSet equation_solutions(const Equation& e, std::size_t n_vars, const Chain& chain,
                                      const Budgets& budget = {}, SolveStats* stats = nullptr) {
  return e.relation == Relation::EQ ? polynomial_eq_solutions(e.lhs, e.rhs, n_vars, chain, budget, stats)
                                    : polynomial_le_solutions(e.lhs, e.rhs, n_vars, chain, budget, stats);
}

/// T_1 ⋆ … ⋆ T_m over the per-equation interval solutions. The system is
/// solvable iff the result has a member without EMPTY coordinates.
/// A system without equations yields the single full vector.
inline SolutionSet solve_intervals(const EquationSystem& sys, const Budgets& budget = {}, SolveStats* stats = nullptr) {
  if (!sys.all_equalities()) throw InvalidInput("solve_intervals expects a system of equations");
  SolutionSet acc(sys.n_vars(), {IntervalVector::full(sys.n_vars(), sys.chain())});
  bool first = true;
  for (const auto& e : sys.equations()) {
    SolutionSet t = equation_solutions(e, sys.n_vars(), sys.chain(), budget, stats);
    if (stats) stats->factors.push_back({e.lhs.size(), t.size()});
    if (first) {
      acc = std::move(t);
      first = false;
    } else {
      acc = detail::checked_star(acc, t, budget, stats);
    }
  }
  return acc;
}

/// (k·n^k)^m with k the largest monomial count, saturating at UINT64_MAX.
inline std::uint64_t interval_solution_bound(const EquationSystem& sys) {
  std::uint64_t k = sys.max_monomials();
  std::uint64_t per = detail::sat_mul(k, detail::sat_pow(sys.n_vars(), k));
  return detail::sat_pow(per, sys.equations().size());
}

// ---------------------------------------------------------------------------
// Point solutions
// ---------------------------------------------------------------------------

/// First assignment in `domain`^n (lexicographic by rank, x_0 most significant)
/// that satisfies every equation, or nullopt. `domain` must be sorted ascending.
inline std::optional<PointAssignment> search_points(const EquationSystem& sys, const std::vector<ChainValue>& domain) {
  const std::size_t n = sys.n_vars();
  if (n == 0) {
    PointAssignment empty;
    return satisfies(sys, empty) ? std::optional(empty) : std::nullopt;
  }
  if (domain.empty()) return std::nullopt;
  std::vector<std::size_t> idx(n, 0);
  PointAssignment x{std::vector<ChainValue>(n, domain.front())};
  while (true) {
    if (satisfies(sys, x)) return x;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < domain.size()) {
        x.values[i] = domain[idx[i]];
        break;
      }
      idx[i] = 0;
      x.values[i] = domain.front();
      if (i == 0) return std::nullopt;
    }
  }
}

/// Searches 𝒱^n, 𝒱 the distinct right-hand sides, for a point solution.
/// A system without equations is solved by the all-bottom assignment.
inline std::optional<PointAssignment> solve_points(const EquationSystem& sys) {
  if (!sys.all_equalities()) throw InvalidInput("solve_points expects a system of equations");
  if (sys.equations().empty()) return PointAssignment{std::vector<ChainValue>(sys.n_vars(), sys.chain().bottom())};
  return search_points(sys, sys.rhs_values());
}

}  // namespace fuzzymin

#endif  // FUZZYMIN_SFPE_HPP
