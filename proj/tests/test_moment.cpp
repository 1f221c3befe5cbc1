#include <gtest/gtest.h>

#include <random>

#include "bellmoment/errors.hpp"
#include "bellmoment/moment.hpp"
#include "support.hpp"

using namespace bellmoment;
using testsupport::random_spec;

namespace {

/// x^2 as f_1 next to f_0 = 1: not a moment sequence.
TabulatedSequence square_tables(std::int64_t radius) {
  TabulatedSequence seq;
  seq.rank = 1;
  seq.order = 1;
  seq.members.emplace(MultiIndex{0}, TabulatedFn::tabulate(1, radius, [](const auto&) {
                        return Scalar(1);
                      }));
  seq.members.emplace(MultiIndex{1}, TabulatedFn::tabulate(1, radius, [](const auto& x) {
                        return Scalar(x[0] * x[0]);
                      }));
  return seq;
}

/// Direct evaluation through the set-partition oracle.
Scalar oracle_member(const MomentSpec& spec, const MultiIndex& alpha, const GroupElement& x) {
  Assignment values;
  for (const auto& [mu, a] : spec.additive) values[bell_var(mu)] = a(x);
  return evaluate(testsupport::partition_bell(alpha), values) * spec.exponential(x);
}

}  // namespace

TEST(MomentSpec, Validation) {
  std::mt19937_64 rng(1);
  auto spec = testsupport::random_spec(rng, 2, 2, 1);
  EXPECT_NO_THROW(spec.validate());
  auto missing = spec;
  missing.additive.erase(MultiIndex{1, 1});
  EXPECT_THROW(missing.validate(), PreconditionError);
  auto extra = spec;
  extra.additive.emplace(MultiIndex{3, 0}, AdditiveFn::zero(1));
  EXPECT_THROW(extra.validate(), PreconditionError);
  auto wrong_dim = spec;
  wrong_dim.additive.at(MultiIndex{1, 0}) = AdditiveFn::zero(2);
  EXPECT_THROW(wrong_dim.validate(), PreconditionError);
}

TEST(Moment, ConstructMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto spec = random_spec(seed);
    auto seq = construct(spec);
    std::mt19937_64 rng(seed);
    for (const auto& [alpha, f] : seq.members) {
      auto x = testsupport::random_point(rng, spec.dim, 3);
      EXPECT_EQ(eval_member(seq, alpha, x), oracle_member(spec, alpha, x))
          << "seed=" << seed << " alpha=" << alpha;
    }
  }
}

TEST(Moment, ConstructThenVerifyPasses) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto seq = tabulate(construct(random_spec(seed)), 2);
    auto r = verify_rank(seq);
    EXPECT_EQ(r.status, VerifyStatus::pass) << seed;
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.failure_count, 0u);
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Moment, PerturbationIsDetected) {
  std::mt19937_64 rng(4);
  auto seq = tabulate(construct(random_spec(rng, 2, 2, 1)), 2);
  auto& t = seq.members.at(MultiIndex{1, 1});
  t.set(GroupElement{1}, t.at(GroupElement{1}) + Scalar(1));
  auto r = verify_rank(seq);
  EXPECT_EQ(r.status, VerifyStatus::fail);
  ASSERT_FALSE(r.failures.empty());
  const auto& w = r.failures.front();
  EXPECT_EQ(w.alpha, (MultiIndex{1, 1}));
  EXPECT_NE(w.lhs, w.rhs);
}

TEST(Moment, ZeroTablesGiveZeroStatus) {
  TabulatedSequence seq;
  seq.rank = 2;
  seq.order = 1;
  for (const auto& a : indices_up_to_height(2, 1)) seq.members.emplace(a, TabulatedFn(1, 2));
  auto r = verify_rank(seq);
  EXPECT_EQ(r.status, VerifyStatus::zero);
  EXPECT_EQ(r.generator, GeneratorValue::zero);
  seq.members.at(MultiIndex{1, 0}).set(GroupElement{1}, Scalar(1));
  EXPECT_EQ(verify_rank(seq).status, VerifyStatus::fail);
}

TEST(Moment, GeneratorOtherThanOneOrZeroFails) {
  auto seq = square_tables(2);
  seq.members.at(MultiIndex{0}) =
      TabulatedFn::tabulate(1, 2, [](const auto&) { return Scalar(2); });
  auto r = verify_rank(seq);
  EXPECT_EQ(r.generator, GeneratorValue::other);
  EXPECT_EQ(r.status, VerifyStatus::fail);
}

TEST(Moment, SampledVerificationIsReproducible) {
  std::mt19937_64 rng(8);
  auto seq = tabulate(construct(random_spec(rng, 1, 2, 2)), 3);
  VerifyOptions opt;
  opt.exhaustive_limit = 10;
  opt.sample_budget = 200;
  opt.seed = 42;
  auto a = verify_rank(seq, opt);
  auto b = verify_rank(seq, opt);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.status, VerifyStatus::pass);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.checked, 200u * seq.members.size());
}

TEST(Moment, MultivariableEquation) {
  std::mt19937_64 rng(12);
  auto seq = tabulate(construct(random_spec(rng, 1, 3, 1)), 3);
  for (std::size_t l : {2, 3, 4}) {
    auto r = verify_multivariable(seq, l);
    EXPECT_EQ(r.status, VerifyStatus::pass) << l;
  }
  auto bad = seq;
  auto& t = bad.members.at(MultiIndex{2});
  t.set(GroupElement{-1}, t.at(GroupElement{-1}) + Scalar(1));
  EXPECT_EQ(verify_multivariable(bad, 3).status, VerifyStatus::fail);
  EXPECT_THROW(verify_multivariable(seq, 1), PreconditionError);
  auto rank2 = tabulate(construct(random_spec(rng, 2, 1, 1)), 2);
  EXPECT_THROW(verify_multivariable(rank2, 3), PreconditionError);
}

TEST(Moment, ReconstructRoundTrip) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto spec = random_spec(seed);
    EXPECT_EQ(reconstruct(tabulate(construct(spec), 2)), spec) << seed;
  }
}

TEST(Moment, TopAdditiveIndependentOfSeed) {
  std::mt19937_64 rng(21);
  auto spec = random_spec(rng, 2, 3, 2);
  auto seq = tabulate(construct(spec), 2);
  IndexMap<AdditiveFn> lower;
  for (const auto& alpha : indices_up_to_height(2, 3)) {
    if (alpha.is_zero()) continue;
    auto s1 = AdditiveFn::zero(2);
    auto s2 = AdditiveFn({testsupport::random_scalar(rng, true), testsupport::random_scalar(rng, true)});
    auto a1 = solve_top_additive(seq, alpha, spec.exponential, lower, s1);
    auto a2 = solve_top_additive(seq, alpha, spec.exponential, lower, s2);
    EXPECT_EQ(a1, a2) << alpha;
    EXPECT_EQ(a1, spec.additive.at(alpha)) << alpha;
    lower.emplace(alpha, a1);
  }
}

TEST(Moment, ReconstructRejectsSquare) {
  try {
    reconstruct(square_tables(3));
    FAIL() << "expected NotMomentSequence";
  } catch (const NotMomentSequence& e) {
    EXPECT_EQ(e.alpha(), (MultiIndex{1}));
    ASSERT_TRUE(e.witness().has_value());
  }
}

TEST(Moment, ReconstructRejectsNonExponentialGenerator) {
  auto seq = square_tables(2);
  seq.members.at(MultiIndex{0}).set(GroupElement{1}, Scalar(7));
  try {
    reconstruct(seq);
    FAIL() << "expected NotMomentSequence";
  } catch (const NotMomentSequence& e) {
    EXPECT_EQ(e.alpha(), (MultiIndex{0}));
  }
}

TEST(Moment, CollapseIsRankOneSequence) {
  std::mt19937_64 rng(31);
  auto spec = random_spec(rng, 2, 3, 1);
  auto seq = construct(spec);
  auto fam = collapse_rank2(seq);
  auto tables = tabulate(fam, 1, 3);
  EXPECT_EQ(verify_rank(tables).status, VerifyStatus::pass);
  EXPECT_EQ(verify_multivariable(tables, 3).status, VerifyStatus::pass);
  // the collapsed generator data reproduces the same tables
  EXPECT_EQ(tabulate(construct(collapse_spec(spec)), 3), tables);
  // phi_n(x) = sum_k C(n,k) f_{k,n-k}(x)
  for (std::uint32_t n = 0; n <= 3; ++n) {
    for (std::int64_t x = -3; x <= 3; ++x) {
      Scalar sum(0);
      for (std::uint32_t k = 0; k <= n; ++k) {
        sum += Scalar(binomial(n, k)) * eval_member(seq, MultiIndex{k, n - k}, GroupElement{x});
      }
      EXPECT_EQ(tables.member(MultiIndex{n}).at(GroupElement{x}), sum);
    }
  }
  EXPECT_THROW(collapse_rank2(construct(random_spec(rng, 1, 2, 1))), PreconditionError);
}

TEST(Moment, ProjectionKeepsSubfamily) {
  std::mt19937_64 rng(41);
  auto seq = construct(random_spec(rng, 3, 2, 1));
  auto proj = project_seq(seq, {0, 2});
  EXPECT_EQ(proj.spec.rank, 2u);
  EXPECT_EQ(verify_rank(tabulate(proj, 2)).status, VerifyStatus::pass);
  for (std::int64_t x = -2; x <= 2; ++x) {
    EXPECT_EQ(eval_member(proj, MultiIndex{1, 1}, GroupElement{x}),
              eval_member(seq, MultiIndex{1, 0, 1}, GroupElement{x}));
  }
}

TEST(Moment, Normalize) {
  std::mt19937_64 rng(51);
  auto seq = construct(random_spec(rng, 2, 2, 2));
  auto n = normalize(seq);
  EXPECT_EQ(n.spec.exponential, Exponential::identity(2));
  GroupElement x{1, -2};
  auto m = seq.spec.exponential(x);
  for (const auto& [alpha, f] : seq.members) {
    EXPECT_EQ(eval_member(n, alpha, x) * m, eval_member(seq, alpha, x));
  }
  EXPECT_EQ(verify_rank(tabulate(n, 2)).status, VerifyStatus::pass);
}
