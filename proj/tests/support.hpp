#ifndef FUZZYMIN_TESTS_SUPPORT_HPP
#define FUZZYMIN_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "fuzzymin/fuzzymin.hpp"

namespace support {

using Labels = std::vector<std::string>;
using LabelMatrix = std::vector<Labels>;

inline fuzzymin::FuzzyAutomaton make_automaton(const fuzzymin::Chain& c, std::vector<std::string> alphabet,
                                               const Labels& pi, const Labels& eta,
                                               const std::vector<LabelMatrix>& delta) {
  using fuzzymin::FuzzyMatrix;
  std::vector<FuzzyMatrix> ds;
  for (const auto& d : delta) ds.push_back(FuzzyMatrix::from_labels(c, d));
  return fuzzymin::FuzzyAutomaton(c, std::move(alphabet), FuzzyMatrix::from_labels(c, {pi}),
                                  [&] {
                                    LabelMatrix col;
                                    for (const auto& e : eta) col.push_back({e});
                                    return FuzzyMatrix::from_labels(c, col);
                                  }(),
                                  std::move(ds));
}

/// π = [1], η = [0.8], δ_a = [0.6] over {0, 0.5, 0.6, 0.8, 1}.
inline fuzzymin::Chain sample_chain() { return fuzzymin::Chain{"0", "0.5", "0.6", "0.8", "1"}; }

inline fuzzymin::FuzzyAutomaton one_state(const std::string& delta = "0.6") {
  return make_automaton(sample_chain(), {"a"}, {"1"}, {"0.8"}, {{{delta}}});
}

/// Two copies of one_state(): π = (1,1), η = (0.8,0.8), δ_a ≡ 0.6.
inline fuzzymin::FuzzyAutomaton duplicated() {
  return make_automaton(sample_chain(), {"a"}, {"1", "1"}, {"0.8", "0.8"}, {{{"0.6", "0.6"}, {"0.6", "0.6"}}});
}

/// f(λ) = 1, f(a) = 0.5, f(aa) = 0.8, f(a^n) = 0 for n ≥ 3: a chain s0 → s1 → s2.
inline fuzzymin::FuzzyAutomaton non_monotone() {
  fuzzymin::Chain c{"0", "0.5", "0.8", "1"};
  return make_automaton(c, {"a"}, {"1", "0", "0"}, {"1", "0.5", "0.8"},
                        {{{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}});
}

inline std::vector<fuzzymin::ChainValue> values(const fuzzymin::Chain& c, const Labels& labels) {
  std::vector<fuzzymin::ChainValue> out;
  for (const auto& l : labels) out.push_back(c.value_of(l));
  return out;
}

}  // namespace support

#endif  // FUZZYMIN_TESTS_SUPPORT_HPP
