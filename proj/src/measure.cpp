#include "bellmoment/measure.hpp"

#include "bellmoment/errors.hpp"

namespace bellmoment {

Scalar FinMeasure::weight(const GroupElement& g) const {
  auto it = atoms_.find(g);
  return it == atoms_.end() ? Scalar(0) : it->second;
}

void FinMeasure::add_atom(const GroupElement& g, const Scalar& w) {
  if (g.dim() != dim_) throw PreconditionError("measure: dimension mismatch");
  if (w.is_zero()) return;
  auto [it, inserted] = atoms_.try_emplace(g, w);
  if (inserted) return;
  it->second += w;
  if (it->second.is_zero()) atoms_.erase(it);
}

FinMeasure& FinMeasure::operator+=(const FinMeasure& rhs) {
  if (rhs.dim_ != dim_) throw PreconditionError("measure: dimension mismatch");
  for (const auto& [g, w] : rhs.atoms_) add_atom(g, w);
  return *this;
}

FinMeasure& FinMeasure::operator-=(const FinMeasure& rhs) {
  if (rhs.dim_ != dim_) throw PreconditionError("measure: dimension mismatch");
  for (const auto& [g, w] : rhs.atoms_) add_atom(g, -w);
  return *this;
}

FinMeasure& FinMeasure::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    atoms_.clear();
    return *this;
  }
  for (auto& [g, w] : atoms_) w *= c;
  return *this;
}

FinMeasure dirac(const GroupElement& y) {
  FinMeasure m(y.dim());
  m.add_atom(y, Scalar(1));
  return m;
}

FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu) {
  if (mu.dim() != nu.dim()) {
    throw PreconditionError("convolution: dimension mismatch");
  }
  FinMeasure out(mu.dim());
  for (const auto& [a, wa] : mu.atoms()) {
    for (const auto& [b, wb] : nu.atoms()) out.add_atom(a + b, wa * wb);
  }
  return out;
}

FinMeasure modified_diff(const PointFn& f, const GroupElement& y) {
  FinMeasure out = dirac(-y);
  out.add_atom(GroupElement::zero(y.dim()), -f(y));
  return out;
}

FinMeasure diff_product(const PointFn& f, std::span<const GroupElement> ys) {
  if (ys.empty()) throw PreconditionError("diff_product needs at least one y");
  FinMeasure out = modified_diff(f, ys[0]);
  for (std::size_t i = 1; i < ys.size(); ++i) {
    out = convolve(out, modified_diff(f, ys[i]));
  }
  return out;
}

Scalar apply_measure(const FinMeasure& mu, const PointFn& f,
                     const GroupElement& x) {
  Scalar out(0);
  for (const auto& [g, w] : mu.atoms()) out += w * f(x - g);
  return out;
}

DegreeCheck monomial_degree_check(
    const PointFn& f, const Exponential& m, std::uint32_t n,
    std::span<const std::vector<GroupElement>> tuples,
    std::span<const GroupElement> points) {
  const PointFn m_fn = [&m](const GroupElement& y) { return m(y); };
  DegreeCheck out;
  for (const auto& ys : tuples) {
    if (ys.size() != n + 1) {
      throw PreconditionError("degree check: each tuple needs n + 1 entries");
    }
    FinMeasure annihilator = diff_product(m_fn, ys);
    for (const auto& x : points) {
      Scalar v = apply_measure(annihilator, f, x);
      if (!v.is_zero()) {
        out.annihilated = false;
        out.witness = DegreeWitness{ys, x, v};
        return out;
      }
    }
  }
  return out;
}

}  // namespace bellmoment
