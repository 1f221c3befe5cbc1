#pragma once

#include <cstdint>

#include "bellmoment/multiindex.hpp"
#include "bellmoment/polynomial.hpp"

namespace bellmoment {

/// A Bell polynomial together with its index.
///
/// Rank-1 polynomials built by `complete_bell`, `aczel_form` and rank-1
/// `bell_via_gf` use integer variables x_1..x_n. Multivariate polynomials
/// (`mv_bell` at any rank, `bell_via_gf` at rank >= 2) use multi-index
/// variables x_mu with 0 < mu <= index.
struct BellPoly {
  MultiIndex index;
  Polynomial value;
};

/// Variable x_mu used by multivariate Bell polynomials.
VarLabel bell_var(const MultiIndex& mu);

/// B_n from B_{n+1} = sum_i C(n,i) B_{n-i} x_{i+1}, B_0 = 1. Memoized.
BellPoly complete_bell(std::uint32_t n);

/// B_alpha = alpha! * [t^alpha] exp(sum_{0<|mu|<=|alpha|} x_mu t^mu / mu!).
/// The exponential series is cached per (rank, degree). Throws
/// ConsistencyError if the scaled coefficient is not integral.
BellPoly bell_via_gf(const MultiIndex& alpha);

/// B_alpha = alpha! * sum prod_mu x_mu^{c_mu} / (c_mu! (mu!)^{c_mu}) over all
/// decompositions alpha = sum_{0<mu<=alpha} c_mu mu. Memoized.
BellPoly mv_bell(const MultiIndex& alpha);

/// n! * sum over j_1 + 2 j_2 + ... + n j_n = n of
/// prod_k (1/j_k!) (x_k/k!)^{j_k}. Throws PreconditionError for n = 0.
BellPoly aczel_form(std::uint32_t n);

/// Checks B_alpha(t + u) == sum_{beta<=alpha} C(alpha,beta) B_beta(t)
/// B_{alpha-beta}(u) as canonical polynomials, using the generating-function
/// route for B.
bool addition_check(const MultiIndex& alpha);

/// Renames the multi-index variables x_{(j)} of a rank-1 multivariate Bell
/// polynomial to the integer variables x_j.
Polynomial rank1_rename(const Polynomial& p);

}  // namespace bellmoment
