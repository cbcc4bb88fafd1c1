#ifndef FUZZYMIN_CHAIN_HPP
#define FUZZYMIN_CHAIN_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzymin/errors.hpp"

namespace fuzzymin {

// ---------------------------------------------------------------------------
// Decimal labels
// ---------------------------------------------------------------------------

/// Canonical form of a decimal label in [0,1]: "0", "1" or "0.<digits>"
/// without trailing zeros. Throws InvalidInput for anything else.
inline std::string canonical_decimal(std::string_view text) {
  auto fail = [&]() -> std::string {
    throw InvalidInput("'" + std::string(text) + "' is not a decimal in [0,1]");
  };
  if (text.empty()) return fail();
  std::size_t dot = text.find('.');
  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac_part.empty()) return fail();
  if (int_part.empty() && frac_part.empty()) return fail();
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!all_digits(int_part) || !all_digits(frac_part)) return fail();

  // strip leading zeros of the integer part, trailing zeros of the fraction
  std::size_t i = 0;
  while (i < int_part.size() && int_part[i] == '0') ++i;
  int_part = int_part.substr(i);
  std::size_t j = frac_part.size();
  while (j > 0 && frac_part[j - 1] == '0') --j;
  frac_part = frac_part.substr(0, j);

  if (int_part.empty()) {
    if (frac_part.empty()) return "0";
    return "0." + std::string(frac_part);
  }
  if (int_part == "1" && frac_part.empty()) return "1";
  return fail();
}

/// Numeric comparison of two canonical decimals.
inline std::strong_ordering compare_decimal(const std::string& a, const std::string& b) {
  // "1" is the only canonical label with a nonzero integer part
  if (a == "1" || b == "1") {
    if (a == b) return std::strong_ordering::equal;
    return a == "1" ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // both "0" or "0.<digits>": lexicographic on the digits after "0." is numeric
  std::string_view fa = a.size() > 1 ? std::string_view(a).substr(2) : std::string_view{};
  std::string_view fb = b.size() > 1 ? std::string_view(b).substr(2) : std::string_view{};
  int c = fa.compare(fb);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Chain values
// ---------------------------------------------------------------------------

/// An element of a finite chain, identified by its rank (0 = bottom).
struct ChainValue {
  std::uint16_t rank = 0;

  constexpr ChainValue() = default;
  constexpr explicit ChainValue(std::uint16_t r) : rank(r) {}

  friend constexpr auto operator<=>(ChainValue, ChainValue) = default;
};

constexpr ChainValue meet(ChainValue a, ChainValue b) { return a < b ? a : b; }
constexpr ChainValue join(ChainValue a, ChainValue b) { return a < b ? b : a; }

/// A finite totally ordered set of exact decimal labels with 0 at the bottom
/// and 1 at the top. Copies share the label table.
class Chain {
public:
  static constexpr std::size_t max_size = 0xFFFF;

  Chain() : Chain(std::vector<std::string>{"0", "1"}) {}

  explicit Chain(const std::vector<std::string>& labels) {
    if (labels.size() < 2) throw InvalidInput("a chain needs at least the values 0 and 1");
    if (labels.size() > max_size) throw InvalidInput("chain has too many values");
    std::vector<std::string> canon;
    canon.reserve(labels.size());
    for (const auto& l : labels) canon.push_back(canonical_decimal(l));
    for (std::size_t i = 1; i < canon.size(); ++i) {
      if (compare_decimal(canon[i - 1], canon[i]) != std::strong_ordering::less)
        throw InvalidInput("chain values must be strictly ascending: '" + labels[i - 1] + "' then '" + labels[i] + "'");
    }
    if (canon.front() != "0") throw InvalidInput("chain must start with 0");
    if (canon.back() != "1") throw InvalidInput("chain must end with 1");
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(canon));
  }

  Chain(std::initializer_list<const char*> labels)
      : Chain(std::vector<std::string>(labels.begin(), labels.end())) {}

  /// The boolean chain {0, 1}.
  static Chain boolean() { return Chain(); }

  std::size_t size() const noexcept { return labels_->size(); }
  ChainValue bottom() const noexcept { return ChainValue(0); }
  ChainValue top() const noexcept { return ChainValue(static_cast<std::uint16_t>(size() - 1)); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }

  bool contains(ChainValue v) const noexcept { return v.rank < size(); }

  const std::string& label(ChainValue v) const {
    check(v);
    return (*labels_)[v.rank];
  }

  /// Value whose label equals `text` numerically. Throws InvalidInput if absent.
  ChainValue value_of(std::string_view text) const {
    std::string c = canonical_decimal(text);
    auto it = std::lower_bound(labels_->begin(), labels_->end(), c, [](const std::string& a, const std::string& b) {
      return compare_decimal(a, b) == std::strong_ordering::less;
    });
    if (it == labels_->end() || *it != c)
      throw InvalidInput("value " + std::string(text) + " is not a member of the chain");
    return ChainValue(static_cast<std::uint16_t>(it - labels_->begin()));
  }

  void check(ChainValue v) const {
    if (!contains(v)) throw ChainMismatch("rank " + std::to_string(v.rank) + " does not belong to a chain of size " + std::to_string(size()));
  }

  ChainValue meet(ChainValue a, ChainValue b) const {
    check(a);
    check(b);
    return fuzzymin::meet(a, b);
  }

  ChainValue join(ChainValue a, ChainValue b) const {
    check(a);
    check(b);
    return fuzzymin::join(a, b);
  }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

inline void require_same_chain(const Chain& a, const Chain& b) {
  if (!(a == b)) throw ChainMismatch();
}

// ---------------------------------------------------------------------------
// Intervals
// ---------------------------------------------------------------------------

/// A closed interval [lo, hi] of a chain, or the distinguished EMPTY interval.
class Interval {
public:
  /// EMPTY.
  constexpr Interval() = default;

  constexpr Interval(ChainValue lo, ChainValue hi) : lo_(lo), hi_(hi), empty_(false) {
    if (hi < lo) throw InvalidInput("interval lower end exceeds upper end");
  }

  static constexpr Interval empty() { return Interval(); }
  static constexpr Interval point(ChainValue v) { return Interval(v, v); }
  static Interval full(const Chain& c) { return Interval(c.bottom(), c.top()); }

  constexpr bool is_empty() const noexcept { return empty_; }
  constexpr ChainValue lo() const noexcept { return lo_; }
  constexpr ChainValue hi() const noexcept { return hi_; }

  constexpr bool contains(ChainValue x) const noexcept { return !empty_ && lo_ <= x && x <= hi_; }

  /// EMPTY first, then lexicographic on (lo, hi).
  friend constexpr std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (a.empty_ || b.empty_) {
      if (a.empty_ && b.empty_) return std::strong_ordering::equal;
      return a.empty_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    return a.hi_ <=> b.hi_;
  }
  friend constexpr bool operator==(const Interval& a, const Interval& b) { return (a <=> b) == 0; }

private:
  ChainValue lo_{};
  ChainValue hi_{};
  bool empty_ = true;
};

constexpr Interval intersect(const Interval& x, const Interval& y) {
  if (x.is_empty() || y.is_empty()) return Interval::empty();
  ChainValue lo = join(x.lo(), y.lo());
  ChainValue hi = meet(x.hi(), y.hi());
  if (hi < lo) return Interval::empty();
  return Interval(lo, hi);
}

/// Fixed-dimension tuple of intervals.
class IntervalVector {
public:
  IntervalVector() = default;
  explicit IntervalVector(std::vector<Interval> coords) : coords_(std::move(coords)) {}
  IntervalVector(std::initializer_list<Interval> coords) : coords_(coords) {}

  /// All coordinates set to the full interval of `c`.
  static IntervalVector full(std::size_t dim, const Chain& c) {
    return IntervalVector(std::vector<Interval>(dim, Interval::full(c)));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Interval& operator[](std::size_t i) const { return coords_[i]; }
  Interval& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Interval>& coords() const noexcept { return coords_; }

  /// True iff no coordinate is EMPTY.
  bool nonempty() const noexcept {
    return std::none_of(coords_.begin(), coords_.end(), [](const Interval& i) { return i.is_empty(); });
  }

  bool contains(const std::vector<ChainValue>& point) const {
    if (point.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!coords_[i].contains(point[i])) return false;
    return true;
  }

  friend auto operator<=>(const IntervalVector&, const IntervalVector&) = default;
  friend bool operator==(const IntervalVector&, const IntervalVector&) = default;

private:
  std::vector<Interval> coords_;
};

inline IntervalVector intersect(const IntervalVector& x, const IntervalVector& y) {
  if (x.dim() != y.dim()) throw ShapeMismatch("interval vectors of different dimension");
  std::vector<Interval> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = intersect(x[i], y[i]);
  return IntervalVector(std::move(out));
}

/// Duplicate-free, canonically sorted set of interval vectors of one dimension.
class SolutionSet {
public:
  explicit SolutionSet(std::size_t dim = 0) : dim_(dim) {}

  SolutionSet(std::size_t dim, std::vector<IntervalVector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
      if (v.dim() != dim_) throw ShapeMismatch("interval vector dimension differs from solution set dimension");
    canonicalize();
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  const std::vector<IntervalVector>& vectors() const noexcept { return vectors_; }
  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  bool contains(const IntervalVector& v) const { return std::binary_search(vectors_.begin(), vectors_.end(), v); }

  /// Whether some member has no EMPTY coordinate.
  bool has_nonempty() const {
    return std::any_of(vectors_.begin(), vectors_.end(), [](const IntervalVector& v) { return v.nonempty(); });
  }

  /// Members with no EMPTY coordinate, in canonical order.
  std::vector<IntervalVector> nonempty_vectors() const {
    std::vector<IntervalVector> out;
    std::copy_if(vectors_.begin(), vectors_.end(), std::back_inserter(out), [](const IntervalVector& v) { return v.nonempty(); });
    return out;
  }

  /// Union with another set of the same dimension.
  void merge(const SolutionSet& other) {
    if (other.dim_ != dim_) throw ShapeMismatch("solution sets of different dimension");
    std::vector<IntervalVector> out;
    out.reserve(vectors_.size() + other.vectors_.size());
    std::set_union(vectors_.begin(), vectors_.end(), other.vectors_.begin(), other.vectors_.end(), std::back_inserter(out));
    vectors_ = std::move(out);
  }

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

private:
  void canonicalize() {
    std::sort(vectors_.begin(), vectors_.end());
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
  }

  std::size_t dim_;
  std::vector<IntervalVector> vectors_;
};

/// {X ∩ Y : X ∈ s1, Y ∈ s2}, deduplicated. Vectors with an EMPTY coordinate are kept.
inline SolutionSet star_product(const SolutionSet& s1, const SolutionSet& s2) {
  if (s1.dim() != s2.dim()) throw ShapeMismatch("star product of solution sets with different dimensions");
  std::vector<IntervalVector> out;
  out.reserve(s1.size() * s2.size());
  for (const auto& x : s1)
    for (const auto& y : s2) out.push_back(intersect(x, y));
  return SolutionSet(s1.dim(), std::move(out));
}

}  // namespace fuzzymin

#endif  // FUZZYMIN_CHAIN_HPP
