#include <gtest/gtest.h>

#include <random>

#include "bellmoment/bell.hpp"
#include "bellmoment/errors.hpp"
#include "support.hpp"

using namespace bellmoment;
using testsupport::partition_bell;

TEST(BellTable, RankOneRowsMatch) {
  const auto& rows = testsupport::rank1_table();
  for (std::uint32_t n = 0; n < rows.size(); ++n) {
    EXPECT_EQ(complete_bell(n).value, testsupport::parse_row(rows[n])) << "n=" << n;
  }
}

TEST(BellTable, RankOneLatexPrintedInTableOrder) {
  // rows 5 and 6 list equal-degree terms in a non-canonical order
  for (std::uint32_t n : {0u, 1u, 2u, 3u, 4u, 7u}) {
    std::string row = testsupport::rank1_table()[n];
    for (std::size_t p; (p = row.find("\\\\&{}")) != std::string::npos;) row.erase(p, 5);
    EXPECT_EQ(complete_bell(n).value.to_latex(), row) << "n=" << n;
  }
}

TEST(BellTable, RankTwoRowsMatch) {
  for (const auto& row : testsupport::rank2_table()) {
    EXPECT_EQ(mv_bell(row.alpha).value, testsupport::parse_row(row.latex))
        << "alpha=" << row.alpha;
  }
}

TEST(BellTable, RankTwoRowsMatchPartitionOracle) {
  for (const auto& row : testsupport::rank2_table()) {
    EXPECT_EQ(partition_bell(row.alpha), testsupport::parse_row(row.latex))
        << "alpha=" << row.alpha;
  }
}

TEST(Bell, SmallValues) {
  Assignment ones{{VarLabel::indexed(1), 1}, {VarLabel::indexed(2), 1}, {VarLabel::indexed(3), 1}};
  EXPECT_EQ(evaluate(complete_bell(3).value, ones), Scalar(5));
  EXPECT_EQ(mv_bell(MultiIndex{1, 1}).value.to_string(), "x_{0,1}*x_{1,0} + x_{1,1}");
  EXPECT_EQ(complete_bell(0).value, Polynomial(Scalar(1)));
  EXPECT_THROW(aczel_form(0), PreconditionError);
}

TEST(Bell, CompleteMatchesPartitionOracle) {
  for (std::uint32_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(complete_bell(n).value, partition_bell(n)) << "n=" << n;
  }
}

TEST(Bell, MultivariateMatchesPartitionOracle) {
  for (const auto& a : indices_up_to_height(2, 5)) {
    EXPECT_EQ(mv_bell(a).value, partition_bell(a)) << "alpha=" << a;
  }
  for (const auto& a : indices_up_to_height(3, 4)) {
    EXPECT_EQ(mv_bell(a).value, partition_bell(a)) << "alpha=" << a;
  }
}

TEST(Bell, BellNumbersAtAllOnes) {
  for (std::uint32_t n = 0; n <= 10; ++n) {
    Assignment ones;
    for (std::uint32_t j = 1; j <= n; ++j) ones[VarLabel::indexed(j)] = 1;
    EXPECT_EQ(evaluate(complete_bell(n).value, ones),
              Scalar(static_cast<long>(testsupport::bell_number_by_counting(n))));
  }
}

TEST(Bell, RoutesAgreeRankOne) {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    auto rec = complete_bell(n).value;
    EXPECT_EQ(rec, bell_via_gf(MultiIndex{n}).value) << n;
    EXPECT_EQ(rec, aczel_form(n).value) << n;
    EXPECT_EQ(rec, rank1_rename(mv_bell(MultiIndex{n}).value)) << n;
  }
}

TEST(Bell, RoutesAgreeRankTwo) {
  for (const auto& a : indices_up_to_height(2, 4)) {
    EXPECT_EQ(mv_bell(a).value, bell_via_gf(a).value) << a;
  }
}

TEST(Bell, IntegerCoefficients) {
  for (const auto& a : indices_up_to_height(2, 5)) {
    EXPECT_TRUE(mv_bell(a).value.all_coefficients_integer());
  }
}

TEST(Bell, AdditionFormula) {
  for (std::uint32_t n = 0; n <= 6; ++n) EXPECT_TRUE(addition_check(MultiIndex{n}));
  for (const auto& a : indices_up_to_height(2, 3)) EXPECT_TRUE(addition_check(a)) << a;
}

TEST(Bell, WeightedHomogeneity) {
  // B_alpha(lambda^{|mu|} x_mu) = lambda^{|alpha|} B_alpha(x)
  std::mt19937_64 rng(3);
  for (const auto& a : indices_up_to_height(2, 4)) {
    auto p = mv_bell(a).value;
    Scalar lambda = testsupport::random_scalar(rng, true);
    Assignment v, w;
    for (const auto& mu : indices_up_to_height(2, a.height())) {
      if (mu.is_zero()) continue;
      auto x = testsupport::random_scalar(rng, false);
      v[bell_var(mu)] = x;
      w[bell_var(mu)] = lambda.pow(static_cast<std::int64_t>(mu.height())) * x;
    }
    EXPECT_EQ(evaluate(p, w), lambda.pow(static_cast<std::int64_t>(a.height())) * evaluate(p, v));
  }
}

TEST(Bell, LeadingAndLinearTerms) {
  // B_alpha contains prod_k x_{e_k}^{alpha_k} and x_alpha, each with coefficient 1
  for (const auto& a : indices_up_to_height(3, 4)) {
    if (a.is_zero()) continue;
    auto p = mv_bell(a).value;
    std::vector<Monomial::Factor> f;
    for (std::size_t k = 0; k < a.rank(); ++k) {
      if (a[k]) f.emplace_back(bell_var(MultiIndex::unit(a.rank(), k)), a[k]);
    }
    EXPECT_EQ(p.coefficient(Monomial(f)), Scalar(1)) << a;
    EXPECT_EQ(p.coefficient(Monomial::variable(bell_var(a))), Scalar(1)) << a;
  }
}
