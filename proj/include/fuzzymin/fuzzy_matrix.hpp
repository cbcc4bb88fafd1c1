#ifndef FUZZYMIN_FUZZY_MATRIX_HPP
#define FUZZYMIN_FUZZY_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzymin/chain.hpp"

namespace fuzzymin {

/// Dense row-major matrix over a chain. Row and column vectors are 1×n and n×1 matrices.
class FuzzyMatrix {
public:
  FuzzyMatrix() = default;

  /// rows×cols matrix filled with `fill` (bottom by default).
  FuzzyMatrix(Chain chain, std::size_t rows, std::size_t cols, ChainValue fill = ChainValue(0))
      : chain_(std::move(chain)), rows_(rows), cols_(cols), entries_(rows * cols, fill) {
    chain_.check(fill);
  }

  FuzzyMatrix(Chain chain, std::size_t rows, std::size_t cols, std::vector<ChainValue> entries)
      : chain_(std::move(chain)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ShapeMismatch("matrix needs " + std::to_string(rows_ * cols_) + " entries, got " + std::to_string(entries_.size()));
    for (auto v : entries_) chain_.check(v);
  }

  /// Builds a matrix from label rows, e.g. {{"0.5", "0.2"}, {"1", "0.3"}}.
  static FuzzyMatrix from_labels(const Chain& chain, const std::vector<std::vector<std::string>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    std::vector<ChainValue> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeMismatch("ragged matrix rows");
      for (const auto& l : row) e.push_back(chain.value_of(l));
    }
    return FuzzyMatrix(chain, r, c, std::move(e));
  }

  static FuzzyMatrix identity(const Chain& chain, std::size_t n) {
    FuzzyMatrix m(chain, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = chain.top();
    return m;
  }

  const Chain& chain() const noexcept { return chain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const ChainValue> entries() const noexcept { return entries_; }

  ChainValue operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  ChainValue& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  ChainValue at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    return (*this)(i, j);
  }

  /// Replaces entry (i, j); the value must belong to the matrix's chain.
  void set(std::size_t i, std::size_t j, ChainValue v) {
    if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
    chain_.check(v);
    (*this)(i, j) = v;
  }

  /// Entrywise ≤.
  bool leq(const FuzzyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("entrywise comparison of different shapes");
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (other.entries_[i] < entries_[i]) return false;
    return true;
  }

  friend bool operator==(const FuzzyMatrix& a, const FuzzyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ && a.chain_ == b.chain_;
  }

private:
  Chain chain_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ChainValue> entries_;
};

/// Max-min product: (A∘B)_ij = ⋁_k (a_ik ∧ b_kj).
inline FuzzyMatrix mm_product(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_chain(a.chain(), b.chain());
  if (a.cols() != b.rows())
    throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  FuzzyMatrix out(a.chain(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ChainValue acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc = join(acc, meet(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

/// Block-diagonal [[A, O], [O, B]].
inline FuzzyMatrix direct_sum(const FuzzyMatrix& a, const FuzzyMatrix& b) {
  require_same_chain(a.chain(), b.chain());
  FuzzyMatrix out(a.chain(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Left fold of mm_product. An empty sequence yields the dim×dim identity;
/// `dim` is ignored otherwise.
inline FuzzyMatrix mm_chain_product(std::span<const FuzzyMatrix> ms, const Chain& chain, std::size_t dim) {
  if (ms.empty()) return FuzzyMatrix::identity(chain, dim);
  FuzzyMatrix acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = mm_product(acc, ms[i]);
  return acc;
}

}  // namespace fuzzymin

#endif  // FUZZYMIN_FUZZY_MATRIX_HPP
