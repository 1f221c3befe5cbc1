#include "bellmoment/series.hpp"

#include "bellmoment/errors.hpp"

namespace bellmoment {

TruncatedSeries::TruncatedSeries(std::size_t rank, std::uint64_t bound)
    : rank_(rank), bound_(bound) {
  if (rank == 0) throw PreconditionError("series rank must be positive");
}

void TruncatedSeries::add(const MultiIndex& index, const Polynomial& p) {
  if (index.rank() != rank_) throw PreconditionError("series rank mismatch");
  if (index.height() > bound_ || p.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(index, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Polynomial TruncatedSeries::coeff(const MultiIndex& index) const {
  if (index.rank() != rank_) throw PreconditionError("series rank mismatch");
  if (index.height() > bound_) {
    throw PreconditionError("coefficient index " + index.to_string() +
                            " beyond truncation bound " +
                            std::to_string(bound_));
  }
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Polynomial() : it->second;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
  if (rhs.rank_ != rank_) throw PreconditionError("series rank mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [idx, p] : rhs.coeffs_) add(idx, p);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, p] : coeffs_) p *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.rank_, std::min(a.bound_, b.bound_));
  for (const auto& [ia, pa] : a.coeffs_) {
    for (const auto& [ib, pb] : b.coeffs_) {
      if (ia.height() + ib.height() > out.bound_) continue;
      out.add(ia + ib, pa * pb);
    }
  }
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s, std::uint64_t bound) {
  MultiIndex zero = MultiIndex::zero(s.rank());
  if (!s.coeff(zero).is_zero()) {
    throw PreconditionError("series_exp needs a zero constant term");
  }
  TruncatedSeries arg(s.rank(), bound);
  arg += s;
  // Horner form: 1 + s(1 + s/2(1 + s/3(... (1 + s/bound)))).
  TruncatedSeries acc(s.rank(), bound);
  acc.add(zero, Polynomial(1));
  for (std::uint64_t k = bound; k >= 1; --k) {
    TruncatedSeries next = arg * acc;
    next *= Scalar(Rational(1, static_cast<unsigned long>(k)));
    next.add(zero, Polynomial(1));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace bellmoment
