#ifndef FUZZYMIN_MINIMIZER_HPP
#define FUZZYMIN_MINIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fuzzymin/automaton.hpp"
#include "fuzzymin/budget.hpp"
#include "fuzzymin/sfpe.hpp"

namespace fuzzymin {

/// ⟨A, k⟩: is there a k-state automaton equivalent to A?
struct MinimizeInstance {
  FuzzyAutomaton automaton;
  std::size_t k = 1;

  MinimizeInstance(FuzzyAutomaton a, std::size_t target) : automaton(std::move(a)), k(target) {
    if (k == 0) throw InvalidInput("target state count must be at least 1");
  }
};

/// The search space for k-state candidates.
///
/// Variables are laid out as π' (k), η' (k), then δ'_σ row-major (k² each) in
/// alphabet order.
struct CandidateSpace {
  /// Distinct π, η and δ values of the input, ascending.
  std::vector<ChainValue> values;
  std::size_t k = 0;
  std::size_t symbols = 0;
  std::size_t var_count = 0;
  /// |V| + |Σ|k² + k, as used for the intermediate word bound.
  std::uint64_t d = 0;
  /// |V|^(n+k) − 1, saturated at UINT64_MAX.
  std::uint64_t word_bound = 0;
  /// |V|^var_count, saturated at UINT64_MAX.
  std::uint64_t candidate_count = 0;

  std::size_t pi_var(std::size_t s) const { return s; }
  std::size_t eta_var(std::size_t s) const { return k + s; }
  std::size_t delta_var(std::size_t sym, std::size_t from, std::size_t to) const {
    return 2 * k + sym * k * k + from * k + to;
  }
};

inline std::vector<ChainValue> automaton_values(const FuzzyAutomaton& a) {
  std::set<ChainValue> v(a.pi().entries().begin(), a.pi().entries().end());
  v.insert(a.eta().entries().begin(), a.eta().entries().end());
  for (const auto& d : a.delta()) v.insert(d.entries().begin(), d.entries().end());
  return {v.begin(), v.end()};
}

inline CandidateSpace build_candidate_space(const MinimizeInstance& inst) {
  const auto& a = inst.automaton;
  CandidateSpace cs;
  cs.values = automaton_values(a);
  cs.k = inst.k;
  cs.symbols = a.alphabet().size();
  cs.var_count = 2 * cs.k + cs.symbols * cs.k * cs.k;
  cs.d = cs.values.size() + cs.symbols * cs.k * cs.k + cs.k;
  std::uint64_t p = detail::sat_pow(cs.values.size(), a.states() + cs.k);
  cs.word_bound = p == UINT64_MAX ? UINT64_MAX : p - 1;
  cs.candidate_count = detail::sat_pow(cs.values.size(), cs.var_count);
  return cs;
}

/// Builds the k-state automaton encoded by `x` (one value per variable).
inline FuzzyAutomaton decode_candidate(const CandidateSpace& cs, const FuzzyAutomaton& source,
                                       const std::vector<ChainValue>& x) {
  if (x.size() != cs.var_count) throw ShapeMismatch("candidate assignment has the wrong length");
  const Chain& c = source.chain();
  const std::size_t k = cs.k;
  FuzzyMatrix pi(c, 1, k), eta(c, k, 1);
  for (std::size_t s = 0; s < k; ++s) {
    pi.set(0, s, x[cs.pi_var(s)]);
    eta.set(s, 0, x[cs.eta_var(s)]);
  }
  std::vector<FuzzyMatrix> delta;
  for (std::size_t sym = 0; sym < cs.symbols; ++sym) {
    FuzzyMatrix m(c, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m.set(i, j, x[cs.delta_var(sym, i, j)]);
    delta.push_back(std::move(m));
  }
  return FuzzyAutomaton(c, source.alphabet(), std::move(pi), std::move(eta), std::move(delta));
}

/// Inverse of decode_candidate for an automaton with cs.k states.
inline std::vector<ChainValue> encode_candidate(const CandidateSpace& cs, const FuzzyAutomaton& a) {
  if (a.states() != cs.k || a.alphabet().size() != cs.symbols) throw ShapeMismatch("automaton does not fit the candidate layout");
  std::vector<ChainValue> x(cs.var_count);
  for (std::size_t s = 0; s < cs.k; ++s) {
    x[cs.pi_var(s)] = a.pi()(0, s);
    x[cs.eta_var(s)] = a.eta()(s, 0);
  }
  for (std::size_t sym = 0; sym < cs.symbols; ++sym)
    for (std::size_t i = 0; i < cs.k; ++i)
      for (std::size_t j = 0; j < cs.k; ++j) x[cs.delta_var(sym, i, j)] = a.delta(sym)(i, j);
  return x;
}

/// Operation counts from the complexity analysis: c = |V|^(n+k) − 1,
/// N = Σ_{i≤c} |Σ|^i equations, and |V|^var_count·N·k² + N·n² operations.
/// Informational only; values saturate to infinity in long double.
struct CostEstimate {
  std::uint64_t c = 0;
  long double equations = 0;
  long double operations = 0;
};

inline CostEstimate cost_estimate(const CandidateSpace& cs, std::size_t n) {
  CostEstimate e;
  e.c = cs.word_bound;
  const long double sigma = static_cast<long double>(cs.symbols);
  const long double c = static_cast<long double>(cs.word_bound);
  if (cs.symbols == 1)
    e.equations = c + 1;
  else
    e.equations = (std::pow(sigma, c + 1) - 1) / (sigma - 1);
  const long double cand = std::pow(static_cast<long double>(cs.values.size()), static_cast<long double>(cs.var_count));
  const long double k = static_cast<long double>(cs.k);
  e.operations = cand * e.equations * k * k + e.equations * static_cast<long double>(n * n);
  return e;
}

struct DecideResult {
  std::optional<FuzzyAutomaton> witness;
  CandidateSpace space;
  /// Candidates that reached the full equivalence check (decide_k) or were
  /// evaluated against the system (decide_k_via_sfpe).
  std::uint64_t examined = 0;
};

namespace detail {

inline void check_candidate_budget(const CandidateSpace& cs, const Budgets& budget) {
  if (cs.candidate_count > budget.candidates)
    throw EnumerationBudgetExceeded("candidate space too large", cs.candidate_count, budget.candidates);
}

/// Target language values on short words, used to discard candidates before
/// the full fixpoint check. Words are grouped by their largest symbol so a
/// partially assigned candidate (δ'_0 … δ'_s fixed) can already be tested.
struct ShortWordFilter {
  struct Probe {
    Word word;
    ChainValue value;
  };
  std::vector<std::vector<Probe>> by_max_symbol;

  ShortWordFilter(const FuzzyAutomaton& a, std::size_t max_words = 64) {
    const std::size_t sigma = a.alphabet().size();
    by_max_symbol.resize(sigma);
    // forward rows over all words up to the length that keeps the probe set small
    std::vector<std::pair<Word, Column>> level{{Word{}, row_of(a.pi())}};
    const Column eta = row_of(a.eta());
    std::size_t total = 1;
    Column t;
    while (true) {
      std::vector<std::pair<Word, Column>> next;
      for (const auto& [w, r] : level) {
        for (std::size_t s = 0; s < sigma; ++s) {
          vec_mat(r, a.delta(s), t);
          Word nw = w;
          nw.symbols.push_back(s);
          next.emplace_back(std::move(nw), t);
        }
      }
      if (total + next.size() > max_words) break;
      total += next.size();
      for (const auto& [w, r] : next) {
        std::size_t mx = *std::max_element(w.symbols.begin(), w.symbols.end());
        by_max_symbol[mx].push_back({w, dot(r, eta)});
      }
      level = std::move(next);
    }
  }
};

struct CandidateEvaluator {
  const CandidateSpace& cs;
  const std::vector<ChainValue>& x;

  ChainValue value(const Word& w) const {
    const std::size_t k = cs.k;
    Column row(k), t(k);
    for (std::size_t s = 0; s < k; ++s) row[s] = x[cs.pi_var(s)];
    for (auto sym : w.symbols) {
      for (std::size_t j = 0; j < k; ++j) {
        ChainValue acc{};
        for (std::size_t i = 0; i < k; ++i) acc = join(acc, meet(row[i], x[cs.delta_var(sym, i, j)]));
        t[j] = acc;
      }
      row.swap(t);
    }
    ChainValue acc{};
    for (std::size_t s = 0; s < k; ++s) acc = join(acc, meet(row[s], x[cs.eta_var(s)]));
    return acc;
  }
};

/// Lexicographic odometer over `domain`^len for positions [first, first+len) of x.
/// Returns false after the last combination (positions are reset to domain[0]).
inline bool advance(std::vector<ChainValue>& x, std::vector<std::size_t>& idx, std::size_t first, std::size_t len,
                    const std::vector<ChainValue>& domain) {
  for (std::size_t p = first + len; p > first;) {
    --p;
    if (++idx[p] < domain.size()) {
      x[p] = domain[idx[p]];
      return true;
    }
    idx[p] = 0;
    x[p] = domain.front();
  }
  return false;
}

/// Odometer over base^t.size(); false once every tuple has been visited.
inline bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t p = t.size(); p > 0;) {
    --p;
    if (++t[p] < base) return true;
    t[p] = 0;
  }
  return false;
}

}  // namespace detail

/// Searches V^var_count in lexicographic order for the first k-state automaton
/// equivalent to inst.automaton. Candidates are pruned by their value on λ and
/// on a few short words before the fixpoint check, which does not change the
/// returned witness.
inline DecideResult decide_k(const MinimizeInstance& inst, const Budgets& budget = {}) {
  const auto& a = inst.automaton;
  DecideResult res;
  res.space = build_candidate_space(inst);
  const CandidateSpace& cs = res.space;
  detail::check_candidate_budget(cs, budget);
  const auto& dom = cs.values;

  const ChainValue target_lambda = language_value(a, Word{});
  const detail::ShortWordFilter filter(a);

  std::vector<ChainValue> x(cs.var_count, dom.front());
  std::vector<std::size_t> idx(cs.var_count, 0);
  const std::size_t kk = cs.k * cs.k;
  detail::CandidateEvaluator eval{cs, x};

  // recursive descent: (π', η') first, then δ'_0, δ'_1, …; each block more
  // significant than the next, so the visiting order is lexicographic
  auto passes = [&](std::size_t sym) {
    for (const auto& p : filter.by_max_symbol[sym])
      if (eval.value(p.word) != p.value) return false;
    return true;
  };

  std::optional<FuzzyAutomaton> found;
  auto search_delta = [&](auto&& self, std::size_t sym) -> bool {
    const std::size_t first = 2 * cs.k + sym * kk;
    do {
      if (!passes(sym)) continue;
      if (sym + 1 < cs.symbols) {
        if (self(self, sym + 1)) return true;
        continue;
      }
      ++res.examined;
      FuzzyAutomaton cand = decode_candidate(cs, a, x);
      if (equivalent(a, cand, budget)) {
        found = std::move(cand);
        return true;
      }
    } while (detail::advance(x, idx, first, kk, dom));
    return false;
  };

  do {
    if (eval.value(Word{}) != target_lambda) continue;
    if (search_delta(search_delta, 0)) break;
  } while (detail::advance(x, idx, 0, 2 * cs.k, dom));

  res.witness = std::move(found);
  return res;
}

/// Materializes X_π' ∘ X_δx ∘ X_η' = π ∘ δ_x ∘ η for every |x| ≤ max_len.
/// Each path s_0 … s_|x| through the candidate contributes one monomial.
inline EquationSystem build_minimization_system(const MinimizeInstance& inst, std::uint64_t max_len,
                                                const Budgets& budget = {}) {
  const auto& a = inst.automaton;
  CandidateSpace cs = build_candidate_space(inst);
  const std::size_t sigma = cs.symbols;
  const std::size_t k = cs.k;

  // word count and monomial count up to max_len
  std::uint64_t words = 0, monos = 0, level = 1, paths = k;
  for (std::uint64_t len = 0; len <= max_len; ++len) {
    words = detail::sat_add(words, level);
    monos = detail::sat_add(monos, detail::sat_mul(level, paths));
    level = detail::sat_mul(level, sigma);
    paths = detail::sat_mul(paths, k);
    if (monos > budget.words) throw BudgetExceeded("minimization system too large", monos, budget.words);
  }

  std::vector<Equation> eqs;
  eqs.reserve(words);
  for (std::uint64_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> word(len, 0);
    do {
      std::vector<Monomial> ms;
      std::vector<std::size_t> path(len + 1, 0);
      do {
        std::vector<std::size_t> vars{cs.pi_var(path.front())};
        for (std::size_t i = 0; i < len; ++i) vars.push_back(cs.delta_var(word[i], path[i], path[i + 1]));
        vars.push_back(cs.eta_var(path.back()));
        ms.emplace_back(std::move(vars));
      } while (detail::next_tuple(path, k));
      eqs.push_back({Polynomial(std::move(ms)), Relation::EQ, language_value(a, Word(word))});
    } while (detail::next_tuple(word, sigma));
  }
  return EquationSystem(a.chain(), cs.var_count, std::move(eqs));
}

/// The literal route: builds the polynomial system for words up to max_len and
/// searches V^var_count for a point solution in lexicographic order.
inline DecideResult decide_k_via_sfpe(const MinimizeInstance& inst, std::uint64_t max_len, const Budgets& budget = {}) {
  DecideResult res;
  res.space = build_candidate_space(inst);
  detail::check_candidate_budget(res.space, budget);
  if (max_len > res.space.word_bound) throw InvalidInput("max_len exceeds the word bound |V|^(n+k) - 1");
  EquationSystem sys = build_minimization_system(inst, max_len, budget);
  auto point = search_points(sys, res.space.values);
  if (point) res.witness = decode_candidate(res.space, inst.automaton, point->values);
  return res;
}

/// Raised by minimize when decide_k could not finish for some k.
class MinimizeBudgetExceeded : public EnumerationBudgetExceeded {
public:
  MinimizeBudgetExceeded(const BudgetExceeded& cause, std::size_t k)
      : EnumerationBudgetExceeded("minimization undecided at k = " + std::to_string(k) + ": " + cause.what(),
                                  cause.count(), cause.limit()),
        k_(k) {}

  std::size_t k() const noexcept { return k_; }

private:
  std::size_t k_;
};

/// Smallest equivalent automaton: the first k < n for which decide_k finds a
/// witness, or `a` itself.
inline FuzzyAutomaton minimize(const FuzzyAutomaton& a, const Budgets& budget = {}) {
  for (std::size_t k = 1; k < a.states(); ++k) {
    try {
      auto r = decide_k(MinimizeInstance(a, k), budget);
      if (r.witness) return *r.witness;
    } catch (const BudgetExceeded& e) {
      throw MinimizeBudgetExceeded(e, k);
    }
  }
  return a;
}

/// Adds one unreachable, non-accepting state (π = η = 0, no transitions).
inline FuzzyAutomaton pad_dead_state(const FuzzyAutomaton& a) {
  const Chain& c = a.chain();
  const std::size_t n = a.states();
  FuzzyMatrix pi(c, 1, n + 1), eta(c, n + 1, 1);
  for (std::size_t s = 0; s < n; ++s) {
    pi(0, s) = a.pi()(0, s);
    eta(s, 0) = a.eta()(s, 0);
  }
  std::vector<FuzzyMatrix> delta;
  for (const auto& d : a.delta()) delta.push_back(direct_sum(d, FuzzyMatrix(c, 1, 1)));
  return FuzzyAutomaton(c, a.alphabet(), std::move(pi), std::move(eta), std::move(delta));
}

/// Crisp reading of an automaton whose values are all 0 or 1: an NFA.
class NfaView {
public:
  explicit NfaView(FuzzyAutomaton a) : a_(std::move(a)) {
    const Chain& c = a_.chain();
    auto crisp = [&](const FuzzyMatrix& m, const char* what) {
      for (auto v : m.entries())
        if (v != c.bottom() && v != c.top())
          throw NonBooleanValue(std::string(what) + " contains the non-boolean value " + c.label(v));
    };
    crisp(a_.pi(), "pi");
    crisp(a_.eta(), "eta");
    for (const auto& d : a_.delta()) crisp(d, "delta");
  }

  const FuzzyAutomaton& automaton() const noexcept { return a_; }
  bool initial(std::size_t s) const { return a_.pi()(0, s) == a_.chain().top(); }
  bool accepting(std::size_t s) const { return a_.eta()(s, 0) == a_.chain().top(); }
  bool transition(std::size_t from, std::size_t symbol, std::size_t to) const {
    return a_.delta(symbol)(from, to) == a_.chain().top();
  }

  /// x belongs to {x : f_A(x) = 1}.
  bool crisp_language_member(const Word& x) const { return language_value(a_, x) == a_.chain().top(); }

private:
  FuzzyAutomaton a_;
};

inline NfaView nfa_bridge(const FuzzyAutomaton& a) { return NfaView(a); }

}  // namespace fuzzymin

#endif  // FUZZYMIN_MINIMIZER_HPP
