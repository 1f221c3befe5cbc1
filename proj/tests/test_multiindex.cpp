#include <gtest/gtest.h>

#include <numeric>

#include "bellmoment/errors.hpp"
#include "bellmoment/multiindex.hpp"

using namespace bellmoment;

TEST(MultiIndex, HeightAndArithmetic) {
  MultiIndex a{2, 1};
  EXPECT_EQ(a.height(), 3u);
  EXPECT_EQ(a + MultiIndex({0, 2}), (MultiIndex{2, 3}));
  EXPECT_EQ(a - MultiIndex({1, 1}), (MultiIndex{1, 0}));
  EXPECT_THROW(a - MultiIndex({0, 2}), PreconditionError);
  EXPECT_TRUE(MultiIndex::zero(3).is_zero());
  EXPECT_EQ(MultiIndex::unit(3, 1), (MultiIndex{0, 1, 0}));
}

TEST(MultiIndex, ParseRoundTrip) {
  EXPECT_EQ(MultiIndex::parse("2,1"), (MultiIndex{2, 1}));
  EXPECT_EQ(MultiIndex::parse(" 0 , 3 "), (MultiIndex{0, 3}));
  EXPECT_EQ(MultiIndex{4}.to_string(), "4");
  EXPECT_EQ((MultiIndex{1, 0, 2}).to_string(), "1,0,2");
  EXPECT_THROW(MultiIndex::parse(""), FormatError);
  EXPECT_THROW(MultiIndex::parse("1,,2"), FormatError);
  EXPECT_THROW(MultiIndex::parse("-1"), FormatError);
  EXPECT_THROW(MultiIndex::parse("a"), FormatError);
}

TEST(MultiIndex, PartialOrder) {
  EXPECT_TRUE(is_below(MultiIndex{1, 0}, MultiIndex{1, 1}));
  EXPECT_FALSE(is_below(MultiIndex{2, 0}, MultiIndex{1, 1}));
  EXPECT_TRUE(is_strictly_below(MultiIndex{1, 0}, MultiIndex{1, 1}));
  EXPECT_FALSE(is_strictly_below(MultiIndex{1, 1}, MultiIndex{1, 1}));
  EXPECT_THROW(is_below(MultiIndex{1}, MultiIndex{1, 1}), PreconditionError);
}

TEST(MultiIndex, GradedLexOrder) {
  auto all = indices_up_to_height(2, 2);
  std::vector<MultiIndex> expected{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
  EXPECT_EQ(all, expected);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_TRUE(graded_lex_compare(all[i - 1], all[i]) < 0);
  }
}

TEST(MultiIndex, IndicesBelowCount) {
  for (const auto& a : indices_up_to_height(3, 4)) {
    auto below = indices_below(a);
    std::size_t expected = 1;
    for (auto e : a.entries()) expected *= e + 1;
    EXPECT_EQ(below.size(), expected);
    for (const auto& b : below) EXPECT_TRUE(is_below(b, a));
    EXPECT_TRUE(std::is_sorted(below.begin(), below.end(), GradedLex{}));
  }
}

TEST(MultiIndex, IndicesUpToHeightCount) {
  // number of r-tuples with sum <= h is C(h + r, r)
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::uint64_t h = 0; h <= 5; ++h) {
      EXPECT_EQ(BigInt(indices_up_to_height(r, h).size()), binomial(h + r, r));
    }
  }
}

TEST(Combinatorics, FactorialsAndBinomials) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(factorial(MultiIndex{2, 3}), 12);
  EXPECT_EQ(binomial(MultiIndex{2, 3}, MultiIndex{1, 1}), 6);
  EXPECT_EQ(binomial(MultiIndex{2, 3}, MultiIndex{3, 0}), 0);
}

TEST(Combinatorics, Multinomial) {
  std::vector<std::uint32_t> p{1, 2, 1};
  EXPECT_EQ(multinomial(4, p), 12);
  std::vector<std::uint32_t> whole{5};
  EXPECT_EQ(multinomial(5, whole), 1);
  std::vector<std::uint32_t> bad{1, 1};
  EXPECT_THROW(multinomial(3, bad), PreconditionError);
  EXPECT_EQ(multinomial(LComposition({2, 0, 1}, 3)), 3);
}

TEST(Combinatorics, CompositionsSumToMultinomialPower) {
  // sum over compositions of n into l parts of the multinomial is l^n
  for (std::size_t l = 2; l <= 4; ++l) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      BigInt sum = 0;
      auto comps = compositions(n, l);
      EXPECT_EQ(BigInt(comps.size()), binomial(n + l - 1, l - 1));
      for (const auto& c : comps) {
        EXPECT_EQ(c.length(), l);
        sum += multinomial(c);
      }
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), l, n);
      EXPECT_EQ(sum, power);
    }
  }
  EXPECT_THROW(compositions(3, 1), PreconditionError);
  EXPECT_THROW(LComposition({3}, 3), PreconditionError);
  EXPECT_THROW(LComposition({1, 1}, 3), PreconditionError);
}

TEST(Combinatorics, VandermondeOverMultiIndices) {
  // sum_{beta <= alpha} C(alpha, beta) = 2^|alpha|
  for (const auto& a : indices_up_to_height(2, 5)) {
    BigInt sum = 0;
    for (const auto& b : indices_below(a)) sum += binomial(a, b);
    EXPECT_EQ(sum, BigInt(1) << static_cast<mp_bitcnt_t>(a.height()));
  }
}

TEST(MultiIndex, Project) {
  EXPECT_EQ(project(MultiIndex{1, 2, 3}, {0, 2}), (MultiIndex{1, 0, 3}));
  EXPECT_THROW(project(MultiIndex{1, 2}, {2}), PreconditionError);
}
