#include "bellmoment/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "bellmoment/errors.hpp"

namespace bellmoment {

// ---------------------------------------------------------------- VarLabel

VarLabel VarLabel::indexed(std::uint32_t j, char family) {
  if (j == 0) throw PreconditionError("variable subscript must be >= 1");
  VarLabel v;
  v.family_ = family;
  v.index_ = j;
  return v;
}

VarLabel VarLabel::multi(MultiIndex mu, char family) {
  if (mu.height() == 0) {
    throw PreconditionError("multi-index variable needs |mu| >= 1");
  }
  VarLabel v;
  v.family_ = family;
  v.multi_ = true;
  v.mu_ = std::move(mu);
  return v;
}

VarLabel VarLabel::with_family(char family) const {
  VarLabel v = *this;
  v.family_ = family;
  return v;
}

std::string VarLabel::to_string() const {
  std::string s(1, family_);
  if (!multi_) return s + "_" + std::to_string(index_);
  if (mu_.rank() == 1) return s + "_{(" + mu_.to_string() + ")}";
  return s + "_{" + mu_.to_string() + "}";
}

std::string VarLabel::to_latex() const {
  std::string s(1, family_);
  if (!multi_) return s + "_{" + std::to_string(index_) + "}";
  if (mu_.rank() == 1) return s + "_{(" + mu_.to_string() + ")}";
  std::string sub;
  for (std::size_t k = 0; k < mu_.rank(); ++k) {
    if (k) sub += ", ";
    sub += std::to_string(mu_[k]);
  }
  return s + "_{" + sub + "}";
}

std::strong_ordering operator<=>(const VarLabel& a, const VarLabel& b) {
  if (auto c = a.family_ <=> b.family_; c != 0) return c;
  if (auto c = a.multi_ <=> b.multi_; c != 0) return c;
  if (!a.multi_) return a.index_ <=> b.index_;
  return graded_lex_compare(a.mu_, b.mu_);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Monomial Monomial::variable(const VarLabel& v, std::uint32_t exponent) {
  return Monomial({{v, exponent}});
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent_of(const VarLabel& v) const {
  for (const auto& f : factors_) {
    if (f.first == v) return f.second;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto& f = out.factors_;
  f.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    auto c = i->first <=> j->first;
    if (c < 0) {
      f.push_back(*i++);
    } else if (c > 0) {
      f.push_back(*j++);
    } else {
      f.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  f.insert(f.end(), i, a.factors_.end());
  f.insert(f.end(), j, b.factors_.end());
  return out;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    auto c = fa[i].first <=> fb[i].first;
    // The smaller label is present in one monomial and absent in the other.
    if (c < 0) return true;
    if (c > 0) return false;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Scalar& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::variable(const VarLabel& v) {
  return term(Scalar(1), Monomial::variable(v));
}

Polynomial Polynomial::term(const Scalar& coeff, const Monomial& m) {
  Polynomial p;
  p.add_term(m, coeff);
  return p;
}

std::uint64_t Polynomial::degree() const {
  // Terms are sorted by descending degree.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<VarLabel> Polynomial::variables() const {
  std::vector<VarLabel> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Polynomial::all_coefficients_integer() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_integer(); });
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial out(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

// ---------------------------------------------------------------- rendering

namespace {

bool negative_real(const Scalar& c) { return c.is_real() && sgn(c.re()) < 0; }

std::string latex_rational(const Rational& q) {
  Rational a = abs(q);
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_scalar(const Scalar& c) {
  // Sign of real coefficients is emitted by the caller.
  if (c.is_real()) return latex_rational(c.re());
  std::string s = "\\left(";
  if (sgn(c.re()) != 0) {
    s += (sgn(c.re()) < 0 ? "-" : "") + latex_rational(c.re());
    s += sgn(c.im()) < 0 ? "-" : "+";
  } else if (sgn(c.im()) < 0) {
    s += "-";
  }
  Rational im = abs(c.im());
  if (im != 1) s += latex_rational(im);
  return s + "i\\right)";
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = negative_real(c);
    Scalar mag = neg ? -c : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (const auto& [v, e] : m.factors()) {
      if (!vars.empty()) vars += "*";
      vars += v.to_string();
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += mag.to_string();
    } else if (mag == Scalar(1)) {
      out += vars;
    } else {
      out += mag.to_string() + "*" + vars;
    }
  }
  return out;
}

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = negative_real(c);
    if (neg) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string vars;
    for (const auto& [v, e] : m.factors()) {
      vars += v.to_latex();
      if (e > 1) vars += "^{" + std::to_string(e) + "}";
    }
    Scalar mag = neg ? -c : c;
    if (vars.empty() || !(mag == Scalar(1))) out += latex_scalar(mag);
    out += vars;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

// ------------------------------------------------------------------ parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) {
    for (std::size_t k = 0; k < text.size(); ++k) {
      char c = text[k];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '&') continue;
      if (c == '{' && k + 1 < text.size() && text[k + 1] == '}') {
        ++k;
        continue;
      }
      src_ += c;
    }
  }

  Polynomial parse() {
    Polynomial out;
    if (src_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < src_.size()) {
      Scalar sign(1);
      if (peek() == '+' || peek() == '-') {
        if (get() == '-') sign = Scalar(-1);
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += sign * parse_term();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("polynomial parse error at offset " +
                      std::to_string(pos_) + ": " + what + " in '" + src_ +
                      "'");
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() {
    if (pos_ >= src_.size()) fail("unexpected end");
    return src_[pos_++];
  }
  bool consume(std::string_view s) {
    if (src_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  std::uint32_t small_int() { return static_cast<std::uint32_t>(std::stoul(digits())); }

  Polynomial parse_term() {
    Polynomial term(1);
    bool any = false;
    while (pos_ < src_.size() && peek() != '+' && peek() != '-') {
      if (consume("*") || consume("\\cdot")) continue;
      term *= parse_factor();
      any = true;
    }
    if (!any) fail("empty term");
    return term;
  }

  Polynomial parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        get();
        num += "/" + digits();
      }
      return Polynomial(Scalar(Scalar::parse_rational(num)));
    }
    if (consume("\\frac")) {
      expect('{');
      std::string num = digits();
      expect('}');
      expect('{');
      std::string den = digits();
      expect('}');
      return Polynomial(Scalar(Scalar::parse_rational(num + "/" + den)));
    }
    // Parenthesized Gaussian coefficient: "(1/2-3*i)" or "\left(\frac{1}{2}-3i\right)".
    bool latex_paren = consume("\\left(");
    if (latex_paren || c == '(') {
      if (!latex_paren) get();
      std::string_view closer = latex_paren ? "\\right)" : ")";
      auto close = src_.find(closer, pos_);
      if (close == std::string::npos) fail("unbalanced '('");
      Polynomial inner = PolyParser(src_.substr(pos_, close - pos_)).parse();
      if (inner.degree() > 0) fail("expected a constant inside parentheses");
      pos_ = close + closer.size();
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      char family = get();
      if (peek() != '_') {
        if (family == 'i') return Polynomial(Scalar(0, 1));
        fail("expected '_' after variable letter");
      }
      get();
      VarLabel v = parse_subscript(family);
      std::uint32_t e = 1;
      if (peek() == '^') {
        get();
        if (peek() == '{') {
          get();
          e = small_int();
          expect('}');
        } else {
          e = small_int();
        }
      }
      return Polynomial::term(Scalar(1), Monomial::variable(v, e));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  VarLabel parse_subscript(char family) {
    if (peek() != '{') return VarLabel::indexed(small_int(), family);
    get();
    if (peek() == '(') {
      get();
      std::uint32_t j = small_int();
      expect(')');
      expect('}');
      return VarLabel::multi(MultiIndex{j}, family);
    }
    std::vector<std::uint32_t> entries{small_int()};
    while (peek() == ',') {
      get();
      entries.push_back(small_int());
    }
    expect('}');
    if (entries.size() == 1) return VarLabel::indexed(entries[0], family);
    return VarLabel::multi(MultiIndex(std::move(entries)), family);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  return PolyParser(text).parse();
}

// ------------------------------------------------------ eval / substitution

Scalar evaluate(const Polynomial& p, const Assignment& values) {
  Scalar out(0);
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        throw PreconditionError("no value for variable " + v.to_string());
      }
      t *= it->second.pow(e);
    }
    out += t;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const Substitution& subs) {
  std::map<std::pair<VarLabel, std::uint32_t>, Polynomial> powers;
  auto power = [&](const VarLabel& v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto s = subs.find(v);
    if (s == subs.end()) {
      throw PreconditionError("no substitution for variable " + v.to_string());
    }
    return powers.emplace(key, s->second.pow(e)).first->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(c);
    for (const auto& [v, e] : m.factors()) t *= power(v, e);
    out += t;
  }
  return out;
}

Polynomial rename(const Polynomial& p, const std::map<VarLabel, VarLabel>& names) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, e] : m.factors()) {
      auto it = names.find(v);
      f.emplace_back(it == names.end() ? v : it->second, e);
    }
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

}  // namespace bellmoment
