#include "bellmoment/scalar.hpp"

#include <cctype>

#include "bellmoment/errors.hpp"

namespace bellmoment {

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

bool Scalar::is_integer() const {
  return is_real() && re_.get_den() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  if (is_real()) return Scalar(Rational(1) / re_);
  Rational n = norm();
  return Scalar(Rational(re_ / n), Rational(-im_ / n));
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                          : static_cast<std::uint64_t>(e);
  Scalar out(1);
  while (k) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  if (!rhs.is_real()) im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  if (!rhs.is_real()) im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out = "(" + re_.get_str();
  std::string im = im_.get_str();
  if (im.front() != '-') out += '+';
  return out + im + "*i)";
}

std::string Scalar::rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational Scalar::parse_rational(const std::string& text) {
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw FormatError("invalid rational '" + text + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw FormatError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw FormatError("empty scalar");
  if (text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  // Imaginary part, if any, is the trailing "<sign><rational>*i" or "i".
  if (text.back() != 'i') return Scalar(parse_rational(text));
  std::string body = text.substr(0, text.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_part = split == std::string::npos ? body : body.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Scalar(re, parse_rational(im_part));
}

std::ostream& operator<<(std::ostream& os, const Scalar& z) {
  return os << z.to_string();
}

}  // namespace bellmoment
