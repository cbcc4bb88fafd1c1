#ifndef FUZZYMIN_RANDOM_HPP
#define FUZZYMIN_RANDOM_HPP

// Seeded instance generators. Output depends only on the seed and the
// parameters (mt19937_64 plus rejection sampling, no std distributions).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fuzzymin/automaton.hpp"
#include "fuzzymin/sfpe.hpp"

namespace fuzzymin::random {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % n;
  }

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  ChainValue value(const Chain& c) { return ChainValue(static_cast<std::uint16_t>(below(c.size()))); }

private:
  std::mt19937_64 engine_;
};

/// `size` evenly spaced values from 0 to 1 (rounded to 4 decimals).
inline Chain uniform_chain(std::size_t size) {
  if (size < 2 || size > 10001) throw InvalidInput("chain size must be between 2 and 10001");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) {
    const std::uint64_t scaled = (i * 10000 * 2 + (size - 1)) / (2 * (size - 1));  // round(i/(size-1) * 10^4)
    if (scaled == 0) {
      labels.push_back("0");
    } else if (scaled == 10000) {
      labels.push_back("1");
    } else {
      std::string digits = std::to_string(scaled);
      labels.push_back(canonical_decimal("0." + std::string(4 - digits.size(), '0') + digits));
    }
  }
  return Chain(labels);
}

/// Symbol names a, b, …, z, then s26, s27, …
inline std::vector<std::string> default_alphabet(std::size_t size) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size; ++i)
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  return out;
}

/// Every entry drawn uniformly from `chain`.
inline FuzzyAutomaton random_automaton(Rng& rng, std::size_t n, const std::vector<std::string>& alphabet,
                                       const Chain& chain) {
  FuzzyMatrix pi(chain, 1, n), eta(chain, n, 1);
  for (std::size_t s = 0; s < n; ++s) pi(0, s) = rng.value(chain);
  for (std::size_t s = 0; s < n; ++s) eta(s, 0) = rng.value(chain);
  std::vector<FuzzyMatrix> delta;
  for (std::size_t sym = 0; sym < alphabet.size(); ++sym) {
    FuzzyMatrix m(chain, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.value(chain);
    delta.push_back(std::move(m));
  }
  return FuzzyAutomaton(chain, alphabet, std::move(pi), std::move(eta), std::move(delta));
}

inline FuzzyAutomaton gen_random(std::uint64_t seed, std::size_t n, std::size_t symbols, std::size_t chain_size) {
  if (n == 0) throw InvalidInput("n must be at least 1");
  if (symbols == 0) throw InvalidInput("alphabet size must be at least 1");
  Rng rng(seed);
  return random_automaton(rng, n, default_alphabet(symbols), uniform_chain(chain_size));
}

/// m equations over n_vars variables; each equation has 1..max_monomials
/// monomials, each a uniformly sized random subset of the variables.
inline EquationSystem random_system(Rng& rng, std::size_t n_vars, std::size_t m, std::size_t max_monomials,
                                    const Chain& chain) {
  if (n_vars == 0) throw InvalidInput("n_vars must be at least 1");
  if (max_monomials == 0) throw InvalidInput("monomial count must be at least 1");
  std::vector<Equation> eqs;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t k = rng.between(1, max_monomials);
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> pool(n_vars);
      for (std::size_t v = 0; v < n_vars; ++v) pool[v] = v;
      const std::size_t size = rng.between(1, n_vars);
      for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.below(n_vars - j)]);
      pool.resize(size);
      ms.emplace_back(std::move(pool));
    }
    eqs.push_back({Polynomial(std::move(ms)), Relation::EQ, rng.value(chain)});
  }
  return EquationSystem(chain, n_vars, std::move(eqs));
}

inline EquationSystem gen_random_system(std::uint64_t seed, std::size_t n_vars, std::size_t m, std::size_t max_monomials,
                                        std::size_t chain_size) {
  Rng rng(seed);
  return random_system(rng, n_vars, m, max_monomials, uniform_chain(chain_size));
}

}  // namespace fuzzymin::random

#endif  // FUZZYMIN_RANDOM_HPP
