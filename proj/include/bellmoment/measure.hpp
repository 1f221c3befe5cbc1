#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bellmoment/group.hpp"

namespace bellmoment {

/// Finitely supported measure on Z^d. Zero-weight atoms are never stored.
///
/// Measures act on functions by (mu * f)(x) = sum_g mu(g) f(x - g), so the
/// point mass at -y translates by +y and
///   (Delta_{f;y} * g)(x) = g(x + y) - f(y) g(x).
class FinMeasure {
 public:
  explicit FinMeasure(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::map<GroupElement, Scalar>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  Scalar weight(const GroupElement& g) const;

  void add_atom(const GroupElement& g, const Scalar& w);

  FinMeasure& operator+=(const FinMeasure& rhs);
  FinMeasure& operator-=(const FinMeasure& rhs);
  FinMeasure& operator*=(const Scalar& c);
  friend FinMeasure operator+(FinMeasure a, const FinMeasure& b) { return a += b; }
  friend FinMeasure operator-(FinMeasure a, const FinMeasure& b) { return a -= b; }
  friend FinMeasure operator*(const Scalar& c, FinMeasure m) { return m *= c; }

  friend bool operator==(const FinMeasure&, const FinMeasure&) = default;

 private:
  std::size_t dim_;
  std::map<GroupElement, Scalar> atoms_;
};

FinMeasure dirac(const GroupElement& y);

/// (mu * nu)(g) = sum_{a+b=g} mu(a) nu(b).
FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu);

/// Delta_{f;y} = delta_{-y} - f(y) delta_0.
FinMeasure modified_diff(const PointFn& f, const GroupElement& y);

/// Convolution product of modified_diff(f, y_i). Throws PreconditionError
/// when ys is empty.
FinMeasure diff_product(const PointFn& f, std::span<const GroupElement> ys);

/// sum_g mu(g) f(x - g). Errors from f (e.g. OutOfDomainError from a table)
/// propagate.
Scalar apply_measure(const FinMeasure& mu, const PointFn& f,
                     const GroupElement& x);

struct DegreeWitness {
  std::vector<GroupElement> ys;
  GroupElement x;
  Scalar value;
};

struct DegreeCheck {
  bool annihilated = true;
  std::optional<DegreeWitness> witness;
};

/// Tests Delta_{m; y_1..y_{n+1}} * f = 0 for every sampled tuple and every
/// sampled point. Each tuple must have n + 1 entries. Reports the first
/// nonzero value as a witness.
DegreeCheck monomial_degree_check(
    const PointFn& f, const Exponential& m, std::uint32_t n,
    std::span<const std::vector<GroupElement>> tuples,
    std::span<const GroupElement> points);

}  // namespace bellmoment
