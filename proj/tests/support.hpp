#pragma once

// Test-only oracles and generators. Nothing here calls the Bell routines of
// the library: polynomials are rebuilt from raw set-partition enumeration.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bellmoment/bell.hpp"
#include "bellmoment/moment.hpp"

namespace testsupport {

using namespace bellmoment;

/// Calls visit(block_of) for every set partition of {0..n-1}, given as a
/// restricted growth string (block_of[0] = 0, block_of[i] <= 1 + max so far).
inline void for_each_set_partition(
    std::size_t n, const std::function<void(const std::vector<std::size_t>&, std::size_t)>& visit) {
  std::vector<std::size_t> rgs(n, 0), maxes(n, 0);
  if (n == 0) {
    visit(rgs, 0);
    return;
  }
  while (true) {
    visit(rgs, maxes[n - 1] + 1);
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == maxes[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
}

inline std::uint64_t bell_number_by_counting(std::size_t n) {
  std::uint64_t count = 0;
  for_each_set_partition(n, [&](const auto&, std::size_t) { ++count; });
  return count;
}

/// B_alpha as a sum over set partitions of |alpha| points where alpha_k
/// points carry colour k; a block with colour counts mu contributes x_mu.
inline Polynomial partition_bell(const MultiIndex& alpha) {
  std::vector<std::size_t> colour;
  for (std::size_t k = 0; k < alpha.rank(); ++k) colour.insert(colour.end(), alpha[k], k);
  Polynomial total;
  for_each_set_partition(colour.size(), [&](const auto& rgs, std::size_t blocks) {
    std::vector<std::vector<std::uint32_t>> counts(
        blocks, std::vector<std::uint32_t>(alpha.rank(), 0));
    for (std::size_t i = 0; i < rgs.size(); ++i) ++counts[rgs[i]][colour[i]];
    std::vector<Monomial::Factor> factors;
    for (auto& c : counts) factors.emplace_back(bell_var(MultiIndex(c)), 1);
    Polynomial term;
    term.add_term(Monomial(std::move(factors)), Scalar(1));
    total = total + term;
  });
  return total;
}

/// Same, with integer labels x_1..x_n (rank 1).
inline Polynomial partition_bell(std::uint32_t n) {
  return rank1_rename(partition_bell(MultiIndex{n}));
}

/// Small Gaussian rational with numerators in [-3, 3] and denominators 1..3.
inline Scalar random_scalar(std::mt19937_64& rng, bool nonzero, bool complex = true) {
  auto draw = [&] {
    long p = static_cast<long>(rng() % 7) - 3;
    long q = static_cast<long>(rng() % 3) + 1;
    return Rational(p, q);
  };
  while (true) {
    Rational re = draw();
    Rational im = complex && rng() % 2 ? draw() : Rational(0);
    re.canonicalize();
    im.canonicalize();
    Scalar z(re, im);
    if (!nonzero || !z.is_zero()) return z;
  }
}

/// Random spec; every additive value is nonzero so that each member has
/// full degree.
inline MomentSpec random_spec(std::mt19937_64& rng, std::size_t rank, std::uint32_t order,
                              std::size_t dim) {
  MomentSpec spec;
  spec.rank = rank;
  spec.order = order;
  spec.dim = dim;
  std::vector<Scalar> bases;
  for (std::size_t i = 0; i < dim; ++i) bases.push_back(random_scalar(rng, true));
  spec.exponential = Exponential(bases);
  for (const auto& mu : indices_up_to_height(rank, order)) {
    if (mu.is_zero()) continue;
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < dim; ++i) v.push_back(random_scalar(rng, true));
    spec.additive.emplace(mu, AdditiveFn(v));
  }
  return spec;
}

/// Random shape d <= 2, r <= 2, N <= 4 from one seed.
inline MomentSpec random_spec(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t rank = 1 + rng() % 2;
  std::size_t dim = 1 + rng() % 2;
  auto order = static_cast<std::uint32_t>(1 + rng() % 4);
  return random_spec(rng, rank, order, dim);
}

inline GroupElement random_point(std::mt19937_64& rng, std::size_t dim, std::int64_t radius) {
  std::vector<std::int64_t> c;
  auto side = static_cast<std::uint64_t>(2 * radius + 1);
  for (std::size_t i = 0; i < dim; ++i) c.push_back(static_cast<std::int64_t>(rng() % side) - radius);
  return GroupElement(std::move(c));
}

/// Reference rows of the low-order Bell polynomials, LaTeX as typeset.
inline const std::vector<std::string>& rank1_table() {
  static const std::vector<std::string> rows{
      "1",
      "x_{1}",
      "x_{1}^{2}+x_{2}",
      "x_{1}^{3}+3x_{1}x_{2}+x_{3}",
      "x_{1}^{4}+6x_{1}^{2}x_{2}+4x_{1}x_{3}+3x_{2}^{2}+x_{4}",
      "x_{1}^{5}+10x_{2}x_{1}^{3}+15x_{2}^{2}x_{1}+10x_{3}x_{1}^{2}+10x_{3}x_{2}+5x_{4}x_{1}+x_{5}",
      "x_{1}^{6}+15x_{2}x_{1}^{4}+20x_{3}x_{1}^{3}+45x_{2}^{2}x_{1}^{2}+15x_{2}^{3}+60x_{3}x_{2}x_{1}"
      "\\\\&{}+15x_{4}x_{1}^{2}+10x_{3}^{2}+15x_{4}x_{2}+6x_{5}x_{1}+x_{6}",
      "x_{1}^{7}+21x_{1}^{5}x_{2}+35x_{1}^{4}x_{3}+105x_{1}^{3}x_{2}^{2}+35x_{1}^{3}x_{4}"
      "\\\\&{}+210x_{1}^{2}x_{2}x_{3}+105x_{1}x_{2}^{3}+21x_{1}^{2}x_{5}+105x_{1}x_{2}x_{4}"
      "\\\\&{}+70x_{1}x_{3}^{2}+105x_{2}^{2}x_{3}+7x_{1}x_{6}+21x_{2}x_{5}+35x_{3}x_{4}+x_{7}",
  };
  return rows;
}

struct Rank2Row {
  MultiIndex alpha;
  std::string latex;
};

inline const std::vector<Rank2Row>& rank2_table() {
  static const std::vector<Rank2Row> rows{
      {{0, 0}, "1"},
      {{0, 1}, "x_{0, 1}"},
      {{1, 0}, "x_{1, 0}"},
      {{1, 1}, "x_{0, 1} x_{1, 0}+x_{1, 1}"},
      {{2, 0}, "x_{1, 0}^{2}+x_{2, 0}"},
      {{0, 2}, "x_{0, 1}^{2}+x_{0, 2}"},
      {{2, 1}, "x_{0, 1}x_{1, 0}^{2}+2x_{1, 0}x_{1, 1}+x_{0, 1}x_{2, 0}+x_{2, 1}"},
      {{2, 2},
       "x_{0, 1}^{2}x_{1, 0}^{2}+x_{0, 2}x_{1, 0}^{2}+4x_{0, 1}x_{1, 0}x_{1, 1}+2x_{1, 1}^{2}"
       "+2x_{1, 0}x_{1, 2}\\\\&&+x_{0, 1}^{2}x_{2, 0}+x_{0, 2}x_{2, 0}+2x_{0, 1}x_{2, 1}+x_{2, 2}"},
  };
  return rows;
}

/// Strips the LaTeX line-continuation markup before parsing.
inline Polynomial parse_row(std::string latex) {
  for (std::size_t p; (p = latex.find("\\\\")) != std::string::npos;) latex.erase(p, 2);
  for (std::size_t p; (p = latex.find('\\')) != std::string::npos;) latex.erase(p, 1);
  return Polynomial::parse(latex);
}

}  // namespace testsupport
