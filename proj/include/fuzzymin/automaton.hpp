#ifndef FUZZYMIN_AUTOMATON_HPP
#define FUZZYMIN_AUTOMATON_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "fuzzymin/budget.hpp"
#include "fuzzymin/chain.hpp"
#include "fuzzymin/fuzzy_matrix.hpp"

namespace fuzzymin {

/// A word over an automaton's alphabet, as symbol indices. Empty is λ.
struct Word {
  std::vector<std::size_t> symbols;

  Word() = default;
  Word(std::initializer_list<std::size_t> s) : symbols(s) {}
  explicit Word(std::vector<std::size_t> s) : symbols(std::move(s)) {}

  std::size_t size() const noexcept { return symbols.size(); }
  bool empty() const noexcept { return symbols.empty(); }

  /// Length-lexicographic order: shorter first, then by symbol index.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.symbols <=> b.symbols;
  }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Fuzzy finite automaton (S, Σ, π, δ, η) over a chain.
class FuzzyAutomaton {
public:
  FuzzyAutomaton(Chain chain, std::vector<std::string> alphabet, FuzzyMatrix pi, FuzzyMatrix eta,
                 std::vector<FuzzyMatrix> delta)
      : chain_(std::move(chain)),
        alphabet_(std::move(alphabet)),
        pi_(std::move(pi)),
        eta_(std::move(eta)),
        delta_(std::move(delta)) {
    n_ = pi_.cols();
    if (n_ == 0) throw InvalidInput("an automaton needs at least one state");
    if (alphabet_.empty()) throw InvalidInput("alphabet must not be empty");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      if (alphabet_[i].empty()) throw InvalidInput("symbol names must not be empty");
      for (std::size_t j = 0; j < i; ++j)
        if (alphabet_[i] == alphabet_[j]) throw InvalidInput("duplicate symbol '" + alphabet_[i] + "'");
    }
    if (pi_.rows() != 1) throw ShapeMismatch("pi must be a row vector");
    if (eta_.rows() != n_ || eta_.cols() != 1) throw ShapeMismatch("eta must be an n x 1 column");
    if (delta_.size() != alphabet_.size()) throw ShapeMismatch("need exactly one transition matrix per symbol");
    require_same_chain(chain_, pi_.chain());
    require_same_chain(chain_, eta_.chain());
    for (const auto& d : delta_) {
      if (d.rows() != n_ || d.cols() != n_) throw ShapeMismatch("transition matrices must be n x n");
      require_same_chain(chain_, d.chain());
    }
  }

  const Chain& chain() const noexcept { return chain_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t states() const noexcept { return n_; }
  const FuzzyMatrix& pi() const noexcept { return pi_; }
  const FuzzyMatrix& eta() const noexcept { return eta_; }
  const std::vector<FuzzyMatrix>& delta() const noexcept { return delta_; }
  const FuzzyMatrix& delta(std::size_t symbol) const { return delta_.at(symbol); }

  std::size_t symbol_index(const std::string& name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) throw InvalidInput("unknown symbol '" + name + "'");
    return static_cast<std::size_t>(it - alphabet_.begin());
  }

  /// Parses whitespace-separated symbol names; an empty or blank string is λ.
  Word parse_word(const std::string& text) const {
    std::istringstream in(text);
    Word w;
    for (std::string tok; in >> tok;) w.symbols.push_back(symbol_index(tok));
    return w;
  }

  /// Symbol names joined by single spaces; λ renders as "λ".
  std::string format_word(const Word& w) const {
    if (w.empty()) return "λ";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += alphabet_.at(w.symbols[i]);
    }
    return out;
  }

  void check_word(const Word& w) const {
    for (auto s : w.symbols)
      if (s >= alphabet_.size()) throw InvalidInput("word uses symbol index " + std::to_string(s) + " outside the alphabet");
  }

  friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;

private:
  Chain chain_;
  std::vector<std::string> alphabet_;
  FuzzyMatrix pi_;
  FuzzyMatrix eta_;
  std::vector<FuzzyMatrix> delta_;
  std::size_t n_ = 0;
};

/// δ_x: identity for λ, otherwise δ_{x1} ∘ … ∘ δ_{xk}.
inline FuzzyMatrix delta_word(const FuzzyAutomaton& a, const Word& x) {
  a.check_word(x);
  FuzzyMatrix acc = FuzzyMatrix::identity(a.chain(), a.states());
  for (auto s : x.symbols) acc = mm_product(acc, a.delta(s));
  return acc;
}

/// f_A(x) = π ∘ δ_x ∘ η.
inline ChainValue language_value(const FuzzyAutomaton& a, const Word& x) {
  a.check_word(x);
  // fold from the right: δ_σ ∘ column stays n×1
  FuzzyMatrix col = a.eta();
  for (auto it = x.symbols.rbegin(); it != x.symbols.rend(); ++it) col = mm_product(a.delta(*it), col);
  return mm_product(a.pi(), col)(0, 0);
}

inline void require_comparable(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2) {
  require_same_chain(a1.chain(), a2.chain());
  if (a1.alphabet() != a2.alphabet()) throw InvalidInput("automata have different alphabets");
}

namespace detail {

using Column = std::vector<ChainValue>;

struct ColumnHash {
  std::size_t operator()(const Column& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : c) h = (h ^ v.rank) * 0x100000001b3ULL;
    return h;
  }
};

inline void mat_vec(const FuzzyMatrix& m, const Column& v, Column& out) {
  out.assign(m.rows(), ChainValue{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ChainValue acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc = join(acc, meet(m(i, j), v[j]));
    out[i] = acc;
  }
}

inline void vec_mat(const Column& r, const FuzzyMatrix& m, Column& out) {
  out.assign(m.cols(), ChainValue{});
  for (std::size_t j = 0; j < m.cols(); ++j) {
    ChainValue acc{};
    for (std::size_t i = 0; i < m.rows(); ++i) acc = join(acc, meet(r[i], m(i, j)));
    out[j] = acc;
  }
}

inline ChainValue dot(const Column& r, const Column& c) {
  ChainValue acc{};
  for (std::size_t i = 0; i < r.size(); ++i) acc = join(acc, meet(r[i], c[i]));
  return acc;
}

inline Column row_of(const FuzzyMatrix& m) { return Column(m.entries().begin(), m.entries().end()); }

}  // namespace detail

/// Outcome of a bounded or unbounded equivalence check.
struct EquivalenceResult {
  bool equivalent = false;
  /// Shortest, then lexicographically least, word on which the languages differ.
  std::optional<Word> counterexample;
  /// Level l with φ(l) = φ(l+1). Only set when the fixpoint was run to completion.
  std::optional<std::size_t> stabilization_index;
  /// Number of distinct vectors discovered.
  std::size_t phi_size = 0;
};

/// Bounded check f1(x) = f2(x) for all |x| ≤ k.
///
/// Walks the words length by length, keeping one representative word per distinct
/// pair of forward state vectors (π1∘δ1_x, π2∘δ2_x). Representatives are the
/// length-lex least words, so the reported counterexample is the least one.
inline EquivalenceResult k_equivalent(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2, std::uint64_t k,
                                      const Budgets& budget = {}) {
  using detail::Column;
  require_comparable(a1, a2);
  const Column eta1(a1.eta().entries().begin(), a1.eta().entries().end());
  const Column eta2(a2.eta().entries().begin(), a2.eta().entries().end());

  struct Entry {
    Column r1, r2;
    Word w;
  };
  std::vector<Entry> level{{detail::row_of(a1.pi()), detail::row_of(a2.pi()), Word{}}};
  EquivalenceResult res;
  Column t1, t2;
  for (std::uint64_t len = 0;; ++len) {
    for (const auto& e : level) {
      if (detail::dot(e.r1, eta1) != detail::dot(e.r2, eta2)) {
        res.counterexample = e.w;
        return res;
      }
    }
    if (len == k) break;
    std::vector<Entry> next;
    std::unordered_map<Column, std::size_t, detail::ColumnHash> seen;
    for (const auto& e : level) {
      for (std::size_t s = 0; s < a1.alphabet().size(); ++s) {
        detail::vec_mat(e.r1, a1.delta(s), t1);
        detail::vec_mat(e.r2, a2.delta(s), t2);
        Column key = t1;
        key.insert(key.end(), t2.begin(), t2.end());
        if (seen.emplace(std::move(key), next.size()).second) {
          Word w = e.w;
          w.symbols.push_back(s);
          next.push_back({t1, t2, std::move(w)});
          if (next.size() > budget.phi) throw BudgetExceeded("k-equivalence level set too large", next.size(), budget.phi);
        }
      }
    }
    level = std::move(next);
  }
  res.equivalent = true;
  return res;
}

/// The distinct values of δ and η of both automata (π excluded).
inline std::vector<ChainValue> theorem3_values(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2) {
  std::set<ChainValue> v;
  for (const auto* a : {&a1, &a2}) {
    for (const auto& d : a->delta()) v.insert(d.entries().begin(), d.entries().end());
    v.insert(a->eta().entries().begin(), a->eta().entries().end());
  }
  return {v.begin(), v.end()};
}

/// d^(n1+n2) − 1 where d counts the distinct δ- and η-values of both automata.
/// Throws BudgetExceeded when the bound passes `ceiling`.
inline std::uint64_t theorem3_bound(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2,
                                    std::uint64_t ceiling = Budgets{}.words) {
  require_comparable(a1, a2);
  std::uint64_t d = theorem3_values(a1, a2).size();
  std::uint64_t p = detail::sat_pow(d, a1.states() + a2.states());
  std::uint64_t bound = p - 1;
  if (p == UINT64_MAX || bound > ceiling) throw BudgetExceeded("word-length bound is too large", bound, ceiling);
  return bound;
}

/// Direct-sum form of a pair of automata over a shared alphabet.
struct JointForm {
  std::vector<FuzzyMatrix> m_sigma;
  FuzzyMatrix eta_joint;
  FuzzyMatrix pi1_ext;
  FuzzyMatrix pi2_ext;

  JointForm(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2) {
    require_comparable(a1, a2);
    const Chain& c = a1.chain();
    const std::size_t n1 = a1.states(), n2 = a2.states();
    for (std::size_t s = 0; s < a1.alphabet().size(); ++s) m_sigma.push_back(direct_sum(a1.delta(s), a2.delta(s)));
    eta_joint = FuzzyMatrix(c, n1 + n2, 1);
    pi1_ext = FuzzyMatrix(c, 1, n1 + n2);
    pi2_ext = FuzzyMatrix(c, 1, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) {
      eta_joint(i, 0) = a1.eta()(i, 0);
      pi1_ext(0, i) = a1.pi()(0, i);
    }
    for (std::size_t i = 0; i < n2; ++i) {
      eta_joint(n1 + i, 0) = a2.eta()(i, 0);
      pi2_ext(0, n1 + i) = a2.pi()(0, i);
    }
  }

  std::size_t dim() const noexcept { return eta_joint.rows(); }
};

/// φ(k) = {M(x)∘η : |x| ≤ k} as a canonical (sorted) set of columns.
struct PhiSet {
  std::size_t level = 0;
  std::vector<std::vector<ChainValue>> vectors;

  bool contains(const std::vector<ChainValue>& v) const { return std::binary_search(vectors.begin(), vectors.end(), v); }
  bool subset_of(const PhiSet& other) const {
    return std::includes(other.vectors.begin(), other.vectors.end(), vectors.begin(), vectors.end());
  }
  friend bool operator==(const PhiSet& a, const PhiSet& b) { return a.vectors == b.vectors; }
};

/// Suffix vectors in discovery order, each with its length-lex least witness word.
struct PhiClosure {
  struct Entry {
    std::vector<ChainValue> vector;
    Word witness;
  };
  std::vector<Entry> entries;
  /// Smallest l with φ(l) = φ(l+1), or the last level explored when stopped early.
  std::size_t level = 0;
  bool complete = false;

  PhiSet as_set() const {
    PhiSet s;
    s.level = level;
    for (const auto& e : entries) s.vectors.push_back(e.vector);
    std::sort(s.vectors.begin(), s.vectors.end());
    return s;
  }
};

/// Runs the frontier iteration of φ. Levels are explored up to `max_level`
/// (unbounded when nullopt); `stop` is called on every new entry and ends the
/// run early when it returns true.
template <class Stop>
PhiClosure explore_phi(const JointForm& j, std::optional<std::size_t> max_level, const Budgets& budget, Stop&& stop) {
  using detail::Column;
  PhiClosure out;
  std::unordered_map<Column, std::size_t, detail::ColumnHash> index;
  Column eta(j.eta_joint.entries().begin(), j.eta_joint.entries().end());
  index.emplace(eta, 0);
  out.entries.push_back({eta, Word{}});
  if (stop(out.entries.back())) return out;

  std::size_t frontier_begin = 0, frontier_end = 1;
  Column t;
  for (std::size_t level = 0;; ++level) {
    out.level = level;
    if (max_level && level >= *max_level) return out;
    // σ outer, frontier (already length-lex sorted) inner: new words come out length-lex sorted
    for (std::size_t s = 0; s < j.m_sigma.size(); ++s) {
      for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
        detail::mat_vec(j.m_sigma[s], out.entries[f].vector, t);
        if (index.contains(t)) continue;
        index.emplace(t, out.entries.size());
        Word w;
        w.symbols.reserve(out.entries[f].witness.size() + 1);
        w.symbols.push_back(s);
        w.symbols.insert(w.symbols.end(), out.entries[f].witness.symbols.begin(), out.entries[f].witness.symbols.end());
        out.entries.push_back({t, std::move(w)});
        if (out.entries.size() > budget.phi)
          throw BudgetExceeded("suffix-vector set grew past the phi budget", out.entries.size(), budget.phi);
        if (stop(out.entries.back())) {
          out.level = level + 1;
          return out;
        }
      }
    }
    if (out.entries.size() == frontier_end) {
      out.complete = true;
      return out;
    }
    frontier_begin = frontier_end;
    frontier_end = out.entries.size();
  }
}

/// φ(k) computed by the frontier iteration, truncated at level k.
inline PhiSet phi_set(const JointForm& j, std::size_t k, const Budgets& budget = {}) {
  PhiSet s = explore_phi(j, k, budget, [](const PhiClosure::Entry&) { return false; }).as_set();
  s.level = k;
  return s;
}

struct EquivalenceOptions {
  /// Stop at the first distinguishing vector instead of completing φ.
  bool early_exit = true;
  Budgets budget{};
};

/// Decides f1 = f2 by iterating φ to its fixpoint and comparing both
/// projections on every vector.
inline EquivalenceResult equivalent_fixpoint(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2,
                                             const EquivalenceOptions& opts = {}) {
  JointForm j(a1, a2);
  const detail::Column p1 = detail::row_of(j.pi1_ext), p2 = detail::row_of(j.pi2_ext);
  auto differs = [&](const PhiClosure::Entry& e) { return detail::dot(p1, e.vector) != detail::dot(p2, e.vector); };

  EquivalenceResult res;
  if (opts.early_exit) {
    bool found = false;
    PhiClosure c = explore_phi(j, std::nullopt, opts.budget, [&](const PhiClosure::Entry& e) {
      found = differs(e);
      return found;
    });
    res.phi_size = c.entries.size();
    if (found) {
      res.counterexample = c.entries.back().witness;
      return res;
    }
    res.equivalent = true;
    res.stabilization_index = c.level;
    return res;
  }

  PhiClosure c = explore_phi(j, std::nullopt, opts.budget, [](const PhiClosure::Entry&) { return false; });
  res.phi_size = c.entries.size();
  res.stabilization_index = c.level;
  for (const auto& e : c.entries) {
    if (differs(e)) {
      res.counterexample = e.witness;
      return res;
    }
  }
  res.equivalent = true;
  return res;
}

/// Whether a1 and a2 recognize the same fuzzy language.
inline bool equivalent(const FuzzyAutomaton& a1, const FuzzyAutomaton& a2, const Budgets& budget = {}) {
  return equivalent_fixpoint(a1, a2, {true, budget}).equivalent;
}

}  // namespace fuzzymin

#endif  // FUZZYMIN_AUTOMATON_HPP
