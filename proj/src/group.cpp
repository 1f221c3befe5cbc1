#include "bellmoment/group.hpp"

#include <algorithm>

#include "bellmoment/errors.hpp"

namespace bellmoment {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw PreconditionError(std::string(what) + ": dimension mismatch (" +
                            std::to_string(expected) + " vs " +
                            std::to_string(got) + ")");
  }
}

}  // namespace

// ------------------------------------------------------------ GroupElement

GroupElement GroupElement::zero(std::size_t dim) {
  return GroupElement(std::vector<std::int64_t>(dim, 0));
}

GroupElement GroupElement::unit(std::size_t dim, std::size_t i) {
  std::vector<std::int64_t> c(dim, 0);
  c.at(i) = 1;
  return GroupElement(std::move(c));
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](auto c) { return c == 0; });
}

std::int64_t GroupElement::sup_norm() const {
  std::int64_t n = 0;
  for (auto c : coords_) n = std::max(n, c < 0 ? -c : c);
  return n;
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  require_dim(dim(), rhs.dim(), "group addition");
  std::vector<std::int64_t> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = coords_[i] + rhs.coords_[i];
  return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
  return *this + (-rhs);
}

GroupElement GroupElement::operator-() const {
  std::vector<std::int64_t> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = -coords_[i];
  return GroupElement(std::move(c));
}

std::string GroupElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  return os << x.to_string();
}

// ----------------------------------------------------- Exponential/Additive

Exponential::Exponential(std::vector<Scalar> bases) : bases_(std::move(bases)) {
  for (const auto& c : bases_) {
    if (c.is_zero()) throw PreconditionError("exponential base must be nonzero");
  }
}

Exponential Exponential::identity(std::size_t dim) {
  return Exponential(std::vector<Scalar>(dim, Scalar(1)));
}

Scalar Exponential::operator()(const GroupElement& x) const {
  require_dim(dim(), x.dim(), "exponential");
  Scalar out(1);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] != 0) out *= bases_[i].pow(x[i]);
  }
  return out;
}

AdditiveFn::AdditiveFn(std::vector<Scalar> gen_values)
    : values_(std::move(gen_values)) {}

AdditiveFn AdditiveFn::zero(std::size_t dim) {
  return AdditiveFn(std::vector<Scalar>(dim, Scalar(0)));
}

bool AdditiveFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Scalar& v) { return v.is_zero(); });
}

Scalar AdditiveFn::operator()(const GroupElement& x) const {
  require_dim(dim(), x.dim(), "additive function");
  Scalar out(0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] != 0) out += values_[i] * Scalar(x[i]);
  }
  return out;
}

AdditiveFn AdditiveFn::operator+(const AdditiveFn& rhs) const {
  require_dim(dim(), rhs.dim(), "additive sum");
  std::vector<Scalar> v(values_);
  for (std::size_t i = 0; i < dim(); ++i) v[i] += rhs.values_[i];
  return AdditiveFn(std::move(v));
}

Scalar eval_exponential(const Exponential& m, const GroupElement& x) {
  return m(x);
}

Scalar eval_additive(const AdditiveFn& a, const GroupElement& x) { return a(x); }

// ------------------------------------------------------------ ClosedFormFn

ClosedFormFn::ClosedFormFn(Exponential exponential_, Polynomial coeff_poly_,
                           std::map<VarLabel, AdditiveFn> additive_family_)
    : exponential(std::move(exponential_)),
      coeff_poly(std::move(coeff_poly_)),
      additive_family(std::move(additive_family_)) {
  for (const auto& v : coeff_poly.variables()) {
    auto it = additive_family.find(v);
    if (it == additive_family.end()) {
      throw PreconditionError("closed form: no additive function for " +
                              v.to_string());
    }
    require_dim(exponential.dim(), it->second.dim(), "closed form");
  }
}

Scalar ClosedFormFn::operator()(const GroupElement& x) const {
  Scalar mx = exponential(x);
  Assignment values;
  for (const auto& v : coeff_poly.variables()) {
    values.emplace(v, additive_family.at(v)(x));
  }
  return evaluate(coeff_poly, values) * mx;
}

Scalar eval_closed(const ClosedFormFn& f, const GroupElement& x) { return f(x); }

// ------------------------------------------------------------- TabulatedFn

namespace {

std::size_t box_size(std::size_t dim, std::int64_t radius) {
  std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= side;
  return n;
}

}  // namespace

TabulatedFn::TabulatedFn(std::size_t dim, std::int64_t radius)
    : dim_(dim), radius_(radius) {
  if (dim == 0) throw PreconditionError("table dimension must be positive");
  if (radius < 0) throw PreconditionError("table radius must be >= 0");
  values_.assign(box_size(dim, radius), Scalar(0));
}

TabulatedFn TabulatedFn::tabulate(std::size_t dim, std::int64_t radius,
                                  const PointFn& f) {
  TabulatedFn t(dim, radius);
  for (std::size_t i = 0; i < t.values_.size(); ++i) t.values_[i] = f(t.point(i));
  return t;
}

bool TabulatedFn::contains(const GroupElement& x) const {
  return x.dim() == dim_ && x.sup_norm() <= radius_;
}

std::size_t TabulatedFn::offset(const GroupElement& x) const {
  if (!contains(x)) {
    throw OutOfDomainError("point " + x.to_string() +
                           " outside the table box of radius " +
                           std::to_string(radius_));
  }
  std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
  std::size_t off = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    off = off * side + static_cast<std::size_t>(x[i] + radius_);
  }
  return off;
}

const Scalar& TabulatedFn::at(const GroupElement& x) const {
  return values_[offset(x)];
}

void TabulatedFn::set(const GroupElement& x, Scalar v) {
  values_[offset(x)] = std::move(v);
}

GroupElement TabulatedFn::point(std::size_t i) const {
  std::size_t side = static_cast<std::size_t>(2 * radius_ + 1);
  std::vector<std::int64_t> c(dim_);
  for (std::size_t k = dim_; k-- > 0;) {
    c[k] = static_cast<std::int64_t>(i % side) - radius_;
    i /= side;
  }
  return GroupElement(std::move(c));
}

std::vector<GroupElement> TabulatedFn::points() const {
  std::vector<GroupElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(point(i));
  return out;
}

bool TabulatedFn::is_identically_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Scalar& v) { return v.is_zero(); });
}

// ------------------------------------------------------------ pairs/classes

std::uint64_t inbox_pair_count(std::size_t dim, std::int64_t radius) {
  auto side = static_cast<std::uint64_t>(2 * radius + 1);
  auto r = static_cast<std::uint64_t>(radius);
  std::uint64_t per_coord = side * side - r * (r + 1);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= per_coord;
  return n;
}

void for_each_inbox_pair(
    const TabulatedFn& t,
    const std::function<void(const GroupElement&, const GroupElement&)>& visit) {
  const auto b = t.radius();
  const auto d = t.dim();
  for (std::size_t i = 0; i < t.size(); ++i) {
    GroupElement x = t.point(i);
    // y_k ranges over [max(-b, -b - x_k), min(b, b - x_k)].
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::max(-b, -b - x[k]);
      hi[k] = std::min(b, b - x[k]);
    }
    std::vector<std::int64_t> y = lo;
    while (true) {
      visit(x, GroupElement(y));
      std::size_t k = d;
      while (k-- > 0) {
        if (y[k] < hi[k]) {
          ++y[k];
          break;
        }
        y[k] = lo[k];
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
}

namespace {

std::optional<Exponential> read_exponential(const TabulatedFn& t) {
  const auto zero = GroupElement::zero(t.dim());
  if (!(t.at(zero) == Scalar(1))) return std::nullopt;
  bool ok = true;
  for_each_inbox_pair(t, [&](const GroupElement& x, const GroupElement& y) {
    if (ok && !(t.at(x + y) == t.at(x) * t.at(y))) ok = false;
  });
  if (!ok) return std::nullopt;
  std::vector<Scalar> bases;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    bases.push_back(t.at(GroupElement::unit(t.dim(), i)));
    if (bases.back().is_zero()) return std::nullopt;
  }
  Exponential m(std::move(bases));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(m(t.point(i)) == t.value(i))) return std::nullopt;
  }
  return m;
}

std::optional<AdditiveFn> read_additive(const TabulatedFn& t,
                                        std::optional<PairWitness>& failure) {
  for_each_inbox_pair(t, [&](const GroupElement& x, const GroupElement& y) {
    if (!failure && !(t.at(x + y) == t.at(x) + t.at(y))) {
      failure = PairWitness{x, y};
    }
  });
  if (failure) return std::nullopt;
  std::vector<Scalar> gens;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    gens.push_back(t.at(GroupElement::unit(t.dim(), i)));
  }
  AdditiveFn a(std::move(gens));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(a(t.point(i)) == t.value(i))) {
      failure = PairWitness{t.point(i), GroupElement::zero(t.dim())};
      return std::nullopt;
    }
  }
  return a;
}

}  // namespace

TableClass classify_table(const TabulatedFn& t) {
  if (t.radius() < 1) {
    throw PreconditionError("classification needs a box radius >= 1");
  }
  TableClass out;
  if (auto a = read_additive(t, out.additive_failure)) {
    out.kind = TableClass::Kind::additive;
    out.generator = std::move(*a);
    return out;
  }
  if (auto m = read_exponential(t)) {
    out.kind = TableClass::Kind::exponential;
    out.generator = std::move(*m);
  }
  return out;
}

}  // namespace bellmoment
