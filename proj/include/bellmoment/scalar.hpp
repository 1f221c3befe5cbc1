#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace bellmoment {

using Rational = mpq_class;

/// Exact Gaussian rational re + im*i. Both parts are kept canonical (lowest
/// terms, positive denominator) after every operation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& v) : re_(v) {}  // NOLINT
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT
  Scalar(Rational re, Rational im);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True when the value is a rational integer.
  bool is_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse; throws PreconditionError on zero.
  Scalar inverse() const;
  /// z^e for any integer e; negative powers of zero throw.
  Scalar pow(std::int64_t e) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Plain-text form: "3", "-1/2", "(1/2-3*i)", "(0+1*i)".
  std::string to_string() const;
  /// Parses the plain-text form, plus bare "i" multiples like "2*i".
  static Scalar parse(const std::string& text);

  /// "p/q" with an explicit denominator (used by the JSON encoding).
  static std::string rational_to_string(const Rational& q);
  /// Accepts "p/q" or "p" with decimal digits. Throws FormatError.
  static Rational parse_rational(const std::string& text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& z);

}  // namespace bellmoment
