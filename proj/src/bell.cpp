#include "bellmoment/bell.hpp"

#include <mutex>
#include <vector>

#include "bellmoment/errors.hpp"
#include "bellmoment/series.hpp"

namespace bellmoment {

namespace {

// One lock per cache; every computation runs to completion under its lock,
// so results never depend on thread interleaving.
struct RecurrenceCache {
  std::mutex lock;
  std::vector<Polynomial> values{Polynomial(1)};
};

struct GfCache {
  std::mutex lock;
  // Per rank: the exponential series at the largest degree computed so far.
  std::map<std::size_t, TruncatedSeries> series;
  IndexMap<Polynomial> values;
};

struct PortCache {
  std::mutex lock;
  IndexMap<Polynomial> values;
};

RecurrenceCache& recurrence_cache() {
  static RecurrenceCache cache;
  return cache;
}
GfCache& gf_cache() {
  static GfCache cache;
  return cache;
}
PortCache& port_cache() {
  static PortCache cache;
  return cache;
}

VarLabel gf_var(const MultiIndex& mu) {
  return mu.rank() == 1 ? VarLabel::indexed(mu[0]) : bell_var(mu);
}

TruncatedSeries exp_generating_series(std::size_t rank, std::uint64_t degree) {
  TruncatedSeries s(rank, degree);
  for (const auto& mu : indices_up_to_height(rank, degree)) {
    if (mu.is_zero()) continue;
    Scalar weight(Rational(1, factorial(mu)));
    s.add(mu, weight * Polynomial::variable(gf_var(mu)));
  }
  return series_exp(s, degree);
}

Polynomial to_family(const Polynomial& p, char family) {
  std::map<VarLabel, VarLabel> names;
  for (const auto& v : p.variables()) names.emplace(v, v.with_family(family));
  return rename(p, names);
}

}  // namespace

VarLabel bell_var(const MultiIndex& mu) { return VarLabel::multi(mu); }

BellPoly complete_bell(std::uint32_t n) {
  auto& cache = recurrence_cache();
  std::lock_guard guard(cache.lock);
  auto& b = cache.values;
  while (b.size() <= n) {
    // b.size() == m + 1 here; build B_{m+1}.
    std::uint32_t m = static_cast<std::uint32_t>(b.size()) - 1;
    Polynomial next;
    for (std::uint32_t i = 0; i <= m; ++i) {
      next += Scalar(binomial(m, i)) * b[m - i] *
              Polynomial::variable(VarLabel::indexed(i + 1));
    }
    b.push_back(std::move(next));
  }
  return {MultiIndex{n}, b[n]};
}

BellPoly bell_via_gf(const MultiIndex& alpha) {
  if (alpha.rank() == 0) throw PreconditionError("rank must be positive");
  auto& cache = gf_cache();
  std::lock_guard guard(cache.lock);
  if (auto it = cache.values.find(alpha); it != cache.values.end()) {
    return {alpha, it->second};
  }
  auto degree = alpha.height();
  auto sit = cache.series.find(alpha.rank());
  if (sit == cache.series.end() || sit->second.bound() < degree) {
    auto series = exp_generating_series(alpha.rank(), degree);
    sit = cache.series.insert_or_assign(alpha.rank(), std::move(series)).first;
  }
  Polynomial value = sit->second.coeff(alpha);
  value *= Scalar(factorial(alpha));
  if (!value.all_coefficients_integer()) {
    throw ConsistencyError("generating-function Bell polynomial B_" +
                           alpha.to_string() + " has non-integer coefficients");
  }
  cache.values.emplace(alpha, value);
  return {alpha, std::move(value)};
}

namespace {

struct PortEnumerator {
  std::vector<MultiIndex> parts;  // every 0 < mu <= alpha
  std::vector<std::uint32_t> mult;
  Rational alpha_fact;
  Polynomial out;

  void run(std::size_t i, std::vector<std::uint32_t>& remaining) {
    if (i == parts.size()) {
      for (auto r : remaining) {
        if (r) return;
      }
      emit();
      return;
    }
    const auto& mu = parts[i];
    std::uint32_t cap = UINT32_MAX;
    for (std::size_t k = 0; k < mu.rank(); ++k) {
      if (mu[k]) cap = std::min(cap, remaining[k] / mu[k]);
    }
    for (std::uint32_t c = 0; c <= cap; ++c) {
      mult[i] = c;
      for (std::size_t k = 0; k < mu.rank(); ++k) remaining[k] -= c * mu[k];
      run(i + 1, remaining);
      for (std::size_t k = 0; k < mu.rank(); ++k) remaining[k] += c * mu[k];
    }
    mult[i] = 0;
  }

  void emit() {
    Rational coeff = alpha_fact;
    std::vector<Monomial::Factor> factors;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!mult[i]) continue;
      BigInt denom = factorial(mult[i]);
      BigInt mu_fact = factorial(parts[i]);
      BigInt mu_pow;
      mpz_pow_ui(mu_pow.get_mpz_t(), mu_fact.get_mpz_t(), mult[i]);
      coeff /= Rational(denom * mu_pow);
      factors.emplace_back(bell_var(parts[i]), mult[i]);
    }
    out.add_term(Monomial(std::move(factors)), Scalar(coeff));
  }
};

}  // namespace

BellPoly mv_bell(const MultiIndex& alpha) {
  if (alpha.rank() == 0) throw PreconditionError("rank must be positive");
  auto& cache = port_cache();
  std::lock_guard guard(cache.lock);
  if (auto it = cache.values.find(alpha); it != cache.values.end()) {
    return {alpha, it->second};
  }
  PortEnumerator e;
  for (auto& mu : indices_below(alpha)) {
    if (!mu.is_zero()) e.parts.push_back(std::move(mu));
  }
  e.mult.assign(e.parts.size(), 0);
  e.alpha_fact = Rational(factorial(alpha));
  std::vector<std::uint32_t> remaining(alpha.entries().begin(),
                                       alpha.entries().end());
  e.run(0, remaining);
  if (!e.out.all_coefficients_integer()) {
    throw ConsistencyError("partition-sum Bell polynomial B_" +
                           alpha.to_string() + " has non-integer coefficients");
  }
  cache.values.emplace(alpha, e.out);
  return {alpha, std::move(e.out)};
}

BellPoly aczel_form(std::uint32_t n) {
  if (n == 0) throw PreconditionError("aczel_form needs n >= 1");
  Polynomial out;
  std::vector<std::uint32_t> j(n + 1, 0);
  const Rational n_fact(factorial(n));
  // Choose j_k for k = n, n-1, ..., 1 with sum k*j_k = n.
  auto recurse = [&](auto&& self, std::uint32_t k, std::uint32_t rem) -> void {
    if (k == 0) {
      if (rem) return;
      Rational coeff = n_fact;
      std::vector<Monomial::Factor> factors;
      for (std::uint32_t q = 1; q <= n; ++q) {
        if (!j[q]) continue;
        BigInt kf_pow;
        BigInt kf = factorial(q);
        mpz_pow_ui(kf_pow.get_mpz_t(), kf.get_mpz_t(), j[q]);
        coeff /= Rational(factorial(j[q]) * kf_pow);
        factors.emplace_back(VarLabel::indexed(q), j[q]);
      }
      out.add_term(Monomial(std::move(factors)), Scalar(coeff));
      return;
    }
    for (std::uint32_t c = 0; c * k <= rem; ++c) {
      j[k] = c;
      self(self, k - 1, rem - c * k);
    }
    j[k] = 0;
  };
  recurse(recurse, n, n);
  return {MultiIndex{n}, std::move(out)};
}

bool addition_check(const MultiIndex& alpha) {
  Polynomial b = bell_via_gf(alpha).value;
  Substitution shift;
  for (const auto& v : b.variables()) {
    shift.emplace(v, Polynomial::variable(v.with_family('t')) +
                         Polynomial::variable(v.with_family('u')));
  }
  Polynomial lhs = substitute(b, shift);
  Polynomial rhs;
  for (const auto& beta : indices_below(alpha)) {
    Polynomial left = to_family(bell_via_gf(beta).value, 't');
    Polynomial right = to_family(bell_via_gf(alpha - beta).value, 'u');
    rhs += Scalar(binomial(alpha, beta)) * (left * right);
  }
  return lhs == rhs;
}

Polynomial rank1_rename(const Polynomial& p) {
  std::map<VarLabel, VarLabel> names;
  for (const auto& v : p.variables()) {
    if (v.is_multi() && v.mu().rank() == 1) {
      names.emplace(v, VarLabel::indexed(v.mu()[0], v.family()));
    }
  }
  return rename(p, names);
}

}  // namespace bellmoment
