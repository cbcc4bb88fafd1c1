#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fuzzymin/fuzzy_matrix.hpp"
#include "oracles.hpp"

using namespace fuzzymin;

namespace {

const Chain kChain{"0", "0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "1"};

FuzzyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const Chain& chain = kChain) {
  FuzzyMatrix m(chain, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ChainValue(static_cast<std::uint16_t>(rng() % chain.size()));
  return m;
}

std::vector<std::vector<std::uint16_t>> ranks(const FuzzyMatrix& m) {
  std::vector<std::vector<std::uint16_t>> out(m.rows(), std::vector<std::uint16_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rank;
  return out;
}

}  // namespace

TEST(MaxMinProduct, IdentityIsNeutral) {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 50; ++round) {
    FuzzyMatrix a = random_matrix(rng, 3, 4);
    EXPECT_EQ(mm_product(FuzzyMatrix::identity(kChain, 3), a), a);
    EXPECT_EQ(mm_product(a, FuzzyMatrix::identity(kChain, 4)), a);
  }
}

TEST(MaxMinProduct, WorkedExample) {
  // entries expanded by hand:
  //   (0,0) = max(min(0.5,0.4), min(0.2,0.6)) = 0.4
  //   (0,1) = max(min(0.5,0.7), min(0.2,0.1)) = 0.5
  //   (1,0) = max(min(1,0.4),   min(0.3,0.6)) = 0.4
  //   (1,1) = max(min(1,0.7),   min(0.3,0.1)) = 0.7
  FuzzyMatrix a = FuzzyMatrix::from_labels(kChain, {{"0.5", "0.2"}, {"1", "0.3"}});
  FuzzyMatrix b = FuzzyMatrix::from_labels(kChain, {{"0.4", "0.7"}, {"0.6", "0.1"}});
  FuzzyMatrix expected = FuzzyMatrix::from_labels(kChain, {{"0.4", "0.5"}, {"0.4", "0.7"}});
  EXPECT_EQ(mm_product(a, b), expected);
  EXPECT_EQ(ranks(mm_product(a, b)), oracle::product(ranks(a), ranks(b)));
}

TEST(MaxMinProduct, ZeroAnnihilates) {
  std::mt19937_64 rng(2);
  FuzzyMatrix a = random_matrix(rng, 2, 3);
  EXPECT_EQ(mm_product(a, FuzzyMatrix(kChain, 3, 2)), FuzzyMatrix(kChain, 2, 2));
}

TEST(MaxMinProduct, Errors) {
  FuzzyMatrix a(kChain, 2, 3);
  EXPECT_THROW(mm_product(a, a), ShapeMismatch);
  FuzzyMatrix other(Chain{"0", "1"}, 3, 1);
  EXPECT_THROW(mm_product(a, other), ChainMismatch);
}

TEST(MaxMinProduct, MatchesDefinitionOnRandomShapes) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4, l = 1 + rng() % 4;
    FuzzyMatrix a = random_matrix(rng, n, m), b = random_matrix(rng, m, l);
    EXPECT_EQ(ranks(mm_product(a, b)), oracle::product(ranks(a), ranks(b)));
  }
}

TEST(MaxMinProduct, Associative) {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 100; ++round) {
    FuzzyMatrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 3, 2);
    EXPECT_EQ(mm_product(mm_product(a, b), c), mm_product(a, mm_product(b, c)));
  }
}

TEST(MaxMinProduct, CreatesNoNewValues) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    FuzzyMatrix a = random_matrix(rng, 3, 3), b = random_matrix(rng, 3, 3);
    std::set<ChainValue> seen(a.entries().begin(), a.entries().end());
    seen.insert(b.entries().begin(), b.entries().end());
    seen.insert(kChain.bottom());
    const FuzzyMatrix p = mm_product(a, b);
    for (auto v : p.entries()) EXPECT_TRUE(seen.contains(v));
  }
}

TEST(MaxMinProduct, Monotone) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 100; ++round) {
    FuzzyMatrix a = random_matrix(rng, 3, 2), b = random_matrix(rng, 2, 3);
    FuzzyMatrix a2 = a, b2 = b;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a2(i, j) = join(a(i, j), ChainValue(static_cast<std::uint16_t>(rng() % kChain.size())));
        b2(j, i) = join(b(j, i), ChainValue(static_cast<std::uint16_t>(rng() % kChain.size())));
      }
    ASSERT_TRUE(a.leq(a2));
    EXPECT_TRUE(mm_product(a, b).leq(mm_product(a2, b2)));
  }
}

TEST(DirectSum, OneByOneBlocks) {
  Chain c{"0", "0.5", "1"};
  FuzzyMatrix s = direct_sum(FuzzyMatrix::from_labels(c, {{"1"}}), FuzzyMatrix::from_labels(c, {{"0.5"}}));
  EXPECT_EQ(s, FuzzyMatrix::from_labels(c, {{"1", "0"}, {"0", "0.5"}}));
}

TEST(DirectSum, Shape) {
  FuzzyMatrix s = direct_sum(FuzzyMatrix(kChain, 2, 3), FuzzyMatrix(kChain, 4, 1));
  EXPECT_EQ(s.rows(), 6u);
  EXPECT_EQ(s.cols(), 4u);
  EXPECT_THROW(direct_sum(FuzzyMatrix(kChain, 1, 1), FuzzyMatrix(Chain{}, 1, 1)), ChainMismatch);
}

TEST(DirectSum, ProductDistributesOverBlocks) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    FuzzyMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    FuzzyMatrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    auto lhs = oracle::product(ranks(direct_sum(a, b)), ranks(direct_sum(c, d)));
    EXPECT_EQ(ranks(direct_sum(mm_product(a, c), mm_product(b, d))), lhs);
  }
}

TEST(ChainProduct, EmptySingletonAndIdempotent) {
  std::vector<FuzzyMatrix> none;
  EXPECT_EQ(mm_chain_product(none, kChain, 2), FuzzyMatrix::identity(kChain, 2));

  std::mt19937_64 rng(9);
  FuzzyMatrix a = random_matrix(rng, 3, 3);
  std::vector<FuzzyMatrix> one{a};
  EXPECT_EQ(mm_chain_product(one, kChain, 0), a);

  FuzzyMatrix scalar = FuzzyMatrix::from_labels(kChain, {{"0.6"}});
  std::vector<FuzzyMatrix> three{scalar, scalar, scalar};
  EXPECT_EQ(mm_chain_product(three, kChain, 1), scalar);

  std::vector<FuzzyMatrix> bad{FuzzyMatrix(kChain, 2, 3), FuzzyMatrix(kChain, 2, 3)};
  EXPECT_THROW(mm_chain_product(bad, kChain, 0), ShapeMismatch);
}
