#pragma once

#include <cstdint>

#include "bellmoment/multiindex.hpp"
#include "bellmoment/polynomial.hpp"

namespace bellmoment {

/// Formal power series in r auxiliary variables t = (t_1..t_r) whose
/// coefficients are polynomials in the x-variables, truncated at total
/// t-degree `bound`. Only the t-degree is truncated.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t rank, std::uint64_t bound);

  std::size_t rank() const { return rank_; }
  std::uint64_t bound() const { return bound_; }
  const IndexMap<Polynomial>& coefficients() const { return coeffs_; }

  /// Adds p * t^index. Terms beyond the bound are silently dropped.
  void add(const MultiIndex& index, const Polynomial& p);

  /// Coefficient polynomial of t^index. Throws PreconditionError when
  /// |index| exceeds the bound or the rank differs.
  Polynomial coeff(const MultiIndex& index) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Scalar& c);
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_compatible(const TruncatedSeries& rhs) const;

  std::size_t rank_;
  std::uint64_t bound_;
  IndexMap<Polynomial> coeffs_;
};

/// exp(s) = sum_{k=0}^{bound} s^k / k!, truncated at total degree `bound`.
/// s is read as the finite sum of its stored terms. Throws PreconditionError
/// if s has a nonzero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s, std::uint64_t bound);

}  // namespace bellmoment
