#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bellmoment/multiindex.hpp"
#include "bellmoment/scalar.hpp"

namespace bellmoment {

/// Name of a polynomial variable: a family letter plus either a positive
/// integer subscript (x_j) or a nonzero multi-index subscript (x_mu).
///
/// Ordering: family, then integer subscripts ascending, then multi-index
/// subscripts in graded-lex order.
class VarLabel {
 public:
  /// x_j, j >= 1.
  static VarLabel indexed(std::uint32_t j, char family = 'x');
  /// x_mu, |mu| >= 1.
  static VarLabel multi(MultiIndex mu, char family = 'x');

  char family() const { return family_; }
  bool is_multi() const { return multi_; }
  std::uint32_t index() const { return index_; }
  const MultiIndex& mu() const { return mu_; }

  VarLabel with_family(char family) const;

  /// Text form: "x_3", "x_{0,1}", rank-1 multi-index "x_{(3)}".
  std::string to_string() const;
  /// LaTeX form: "x_{3}", "x_{0, 1}", "x_{(3)}".
  std::string to_latex() const;

  friend bool operator==(const VarLabel&, const VarLabel&) = default;
  friend std::strong_ordering operator<=>(const VarLabel& a,
                                          const VarLabel& b);

 private:
  VarLabel() = default;
  char family_ = 'x';
  bool multi_ = false;
  std::uint32_t index_ = 0;
  MultiIndex mu_;
};

/// Product of variables with positive exponents, sorted by VarLabel.
class Monomial {
 public:
  using Factor = std::pair<VarLabel, std::uint32_t>;

  Monomial() = default;
  /// Factors in any order; repeated labels are merged, zero exponents dropped.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(const VarLabel& v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent_of(const VarLabel& v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Printing order of terms: descending total degree, then descending
/// lexicographic exponent vectors with variables taken in ascending label
/// order. Strict weak order; equal only for equal monomials.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Canonical: no zero coefficients are ever stored, so equal polynomials
/// have equal term maps.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, TermOrder>;

  Polynomial() = default;
  Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT
  static Polynomial variable(const VarLabel& v);
  static Polynomial term(const Scalar& coeff, const Monomial& m);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for constants and for the zero polynomial.
  std::uint64_t degree() const;
  Scalar coefficient(const Monomial& m) const;
  /// Sorted, de-duplicated list of variables that occur.
  std::vector<VarLabel> variables() const;
  bool all_coefficients_integer() const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= Scalar(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(std::uint32_t e) const;

  /// Plain text: "x_{0,1}*x_{1,0} + x_{1,1}", "x_1^3 + 3*x_1*x_2 + x_3".
  std::string to_string() const;
  /// LaTeX in table style: "x_{1}^{3}+3x_{1}x_{2}+x_{3}".
  std::string to_latex() const;
  /// Parses either rendering (and the common hand-written LaTeX variants
  /// with spaces, `{}` or `\frac{p}{q}` coefficients). Throws FormatError.
  static Polynomial parse(const std::string& text);

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

using Assignment = std::map<VarLabel, Scalar>;
using Substitution = std::map<VarLabel, Polynomial>;

/// Exact evaluation. Throws PreconditionError naming the first variable of
/// `p` that has no value.
Scalar evaluate(const Polynomial& p, const Assignment& values);

/// Replaces every variable by a polynomial. Throws PreconditionError when a
/// variable of `p` is missing from `subs`.
Polynomial substitute(const Polynomial& p, const Substitution& subs);

/// Renames variables one-for-one; labels not in the map stay as they are.
Polynomial rename(const Polynomial& p, const std::map<VarLabel, VarLabel>& names);

}  // namespace bellmoment
