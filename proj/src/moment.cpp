#include "bellmoment/moment.hpp"

#include <random>

#include "bellmoment/bell.hpp"

namespace bellmoment {

// ------------------------------------------------------------------ types

void MomentSpec::validate() const {
  if (rank == 0) throw PreconditionError("moment spec: rank must be >= 1");
  if (dim == 0) throw PreconditionError("moment spec: dimension must be >= 1");
  if (exponential.dim() != dim) {
    throw PreconditionError("moment spec: exponential has dimension " +
                            std::to_string(exponential.dim()) + ", expected " +
                            std::to_string(dim));
  }
  std::size_t expected = 0;
  for (const auto& mu : indices_up_to_height(rank, order)) {
    if (mu.is_zero()) continue;
    ++expected;
    auto it = additive.find(mu);
    if (it == additive.end()) {
      throw PreconditionError("moment spec: missing additive function for mu=" +
                              mu.to_string());
    }
    if (it->second.dim() != dim) {
      throw PreconditionError("moment spec: additive function for mu=" +
                              mu.to_string() + " has wrong dimension");
    }
  }
  if (additive.size() != expected) {
    throw PreconditionError(
        "moment spec: additive family has entries outside 1 <= |mu| <= N");
  }
}

const ClosedFormFn& MomentSequence::member(const MultiIndex& alpha) const {
  auto it = members.find(alpha);
  if (it == members.end()) {
    throw PreconditionError("no member f_" + alpha.to_string() +
                            " (rank " + std::to_string(spec.rank) + ", order " +
                            std::to_string(spec.order) + ")");
  }
  return it->second;
}

std::size_t TabulatedSequence::dim() const {
  if (members.empty()) throw PreconditionError("empty tabulated sequence");
  return members.begin()->second.dim();
}

std::int64_t TabulatedSequence::radius() const {
  if (members.empty()) throw PreconditionError("empty tabulated sequence");
  return members.begin()->second.radius();
}

void TabulatedSequence::validate() const {
  if (rank == 0) throw PreconditionError("tabulated sequence: rank must be >= 1");
  std::size_t expected = 0;
  for (const auto& alpha : indices_up_to_height(rank, order)) {
    ++expected;
    if (!members.count(alpha)) {
      throw PreconditionError("tabulated sequence: missing member f_" +
                              alpha.to_string());
    }
  }
  if (members.size() != expected) {
    throw PreconditionError(
        "tabulated sequence: members outside |alpha| <= N or of wrong rank");
  }
  for (const auto& [alpha, t] : members) {
    if (t.dim() != dim() || t.radius() != radius()) {
      throw PreconditionError("tabulated sequence: member f_" +
                              alpha.to_string() +
                              " is on a different box than f_0");
    }
  }
}

const TabulatedFn& TabulatedSequence::member(const MultiIndex& alpha) const {
  auto it = members.find(alpha);
  if (it == members.end()) {
    throw PreconditionError("no tabulated member f_" + alpha.to_string());
  }
  return it->second;
}

NotMomentSequence::NotMomentSequence(MultiIndex alpha,
                                     std::optional<PairWitness> witness,
                                     const std::string& what)
    : Error(what), alpha_(std::move(alpha)), witness_(std::move(witness)) {}

// ------------------------------------------------------------ construction

namespace {

std::map<VarLabel, AdditiveFn> family_for(const Polynomial& p,
                                          const IndexMap<AdditiveFn>& additive) {
  std::map<VarLabel, AdditiveFn> out;
  for (const auto& v : p.variables()) out.emplace(v, additive.at(v.mu()));
  return out;
}

MultiIndex embed(const MultiIndex& small, const std::vector<std::size_t>& coords,
                 std::size_t rank) {
  std::vector<std::uint32_t> e(rank, 0);
  for (std::size_t k = 0; k < coords.size(); ++k) e[coords[k]] = small[k];
  return MultiIndex(std::move(e));
}

}  // namespace

MomentSequence construct(const MomentSpec& spec) {
  spec.validate();
  MomentSequence seq{spec, {}};
  for (const auto& alpha : indices_up_to_height(spec.rank, spec.order)) {
    Polynomial b = mv_bell(alpha).value;
    auto family = family_for(b, spec.additive);
    seq.members.emplace(alpha, ClosedFormFn(spec.exponential, std::move(b),
                                            std::move(family)));
  }
  return seq;
}

Scalar eval_member(const MomentSequence& seq, const MultiIndex& alpha,
                   const GroupElement& x) {
  return seq.member(alpha)(x);
}

TabulatedSequence tabulate(const ClosedFamily& family, std::size_t dim,
                           std::int64_t radius) {
  TabulatedSequence out{family.rank, family.order, {}};
  for (const auto& [alpha, f] : family.members) {
    if (f.dim() != dim) throw PreconditionError("tabulate: dimension mismatch");
    out.members.emplace(alpha, TabulatedFn::tabulate(dim, radius, f));
  }
  return out;
}

TabulatedSequence tabulate(const MomentSequence& seq, std::int64_t radius) {
  return tabulate(ClosedFamily{seq.spec.rank, seq.spec.order, seq.members},
                  seq.spec.dim, radius);
}

// ------------------------------------------------------------ verification

namespace {

class FailureLog {
 public:
  FailureLog(VerifyReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void record(const MultiIndex& alpha, std::vector<GroupElement> points,
              const Scalar& lhs, const Scalar& rhs) {
    ++report_.failure_count;
    if (report_.failures.size() < cap_) {
      report_.failures.push_back({alpha, std::move(points), lhs, rhs});
    }
  }

 private:
  VerifyReport& report_;
  std::size_t cap_;
};

void finish(VerifyReport& report) {
  if (report.failure_count > 0) {
    report.status = VerifyStatus::fail;
  } else if (report.generator == GeneratorValue::zero) {
    report.status = VerifyStatus::zero;
  } else {
    report.status = VerifyStatus::pass;
  }
}

/// Branch of the dichotomy where f_0(0) = 0: every member must vanish.
void check_all_vanish(const TabulatedSequence& seq, VerifyReport& report,
                      FailureLog& log) {
  for (const auto& [alpha, t] : seq.members) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      ++report.checked;
      if (!t.value(i).is_zero()) log.record(alpha, {t.point(i)}, t.value(i), Scalar(0));
    }
  }
}

GeneratorValue generator_value(const TabulatedSequence& seq) {
  const auto& v = seq.member(MultiIndex::zero(seq.rank)).at(GroupElement::zero(seq.dim()));
  if (v.is_zero()) return GeneratorValue::zero;
  if (v == Scalar(1)) return GeneratorValue::one;
  return GeneratorValue::other;
}

/// Uniform point of the box.
GroupElement random_point(std::mt19937_64& rng, std::size_t dim,
                          std::int64_t radius) {
  auto side = static_cast<std::uint64_t>(2 * radius + 1);
  std::vector<std::int64_t> c(dim);
  for (auto& v : c) v = static_cast<std::int64_t>(rng() % side) - radius;
  return GroupElement(std::move(c));
}

/// Up to `budget` tuples of `l` box points whose sum is in the box, drawn
/// uniformly (with replacement) by rejection.
std::vector<std::vector<GroupElement>> sample_tuples(std::mt19937_64& rng,
                                                     const TabulatedFn& box,
                                                     std::size_t l,
                                                     std::uint64_t budget) {
  std::vector<std::vector<GroupElement>> out;
  out.reserve(budget);
  const std::uint64_t max_attempts = budget * 1000 + 1000;
  for (std::uint64_t attempt = 0; attempt < max_attempts && out.size() < budget;
       ++attempt) {
    std::vector<GroupElement> tuple;
    GroupElement sum = GroupElement::zero(box.dim());
    for (std::size_t t = 0; t < l; ++t) {
      tuple.push_back(random_point(rng, box.dim(), box.radius()));
      sum = sum + tuple.back();
    }
    if (box.contains(sum)) out.push_back(std::move(tuple));
  }
  return out;
}

/// Every l-tuple of box points with in-box sum, lexicographic.
std::vector<std::vector<GroupElement>> all_tuples(const TabulatedFn& box,
                                                  std::size_t l) {
  std::vector<std::vector<GroupElement>> out;
  std::vector<std::size_t> idx(l, 0);
  auto pts = box.points();
  while (true) {
    std::vector<GroupElement> tuple;
    GroupElement sum = GroupElement::zero(box.dim());
    for (auto i : idx) {
      tuple.push_back(pts[i]);
      sum = sum + pts[i];
    }
    if (box.contains(sum)) out.push_back(std::move(tuple));
    std::size_t k = l;
    while (k-- > 0) {
      if (++idx[k] < pts.size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

}  // namespace

VerifyReport verify_rank(const TabulatedSequence& seq,
                         const VerifyOptions& options) {
  seq.validate();
  if (seq.radius() < 1) {
    throw PreconditionError("verification needs a box radius >= 1");
  }
  VerifyReport report;
  FailureLog log(report, options.max_failures);
  report.generator = generator_value(seq);
  if (report.generator == GeneratorValue::zero) {
    check_all_vanish(seq, report, log);
    finish(report);
    return report;
  }

  const auto& box = seq.member(MultiIndex::zero(seq.rank));
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  if (inbox_pair_count(seq.dim(), seq.radius()) <= options.exhaustive_limit) {
    for_each_inbox_pair(box, [&](const GroupElement& x, const GroupElement& y) {
      pairs.emplace_back(x, y);
    });
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    for (auto& t : sample_tuples(rng, box, 2, options.sample_budget)) {
      pairs.emplace_back(std::move(t[0]), std::move(t[1]));
    }
  }

  for (const auto& [alpha, f_alpha] : seq.members) {
    std::vector<std::tuple<BigInt, const TabulatedFn*, const TabulatedFn*>> terms;
    for (const auto& beta : indices_below(alpha)) {
      terms.emplace_back(binomial(alpha, beta), &seq.member(beta),
                         &seq.member(alpha - beta));
    }
    for (const auto& [x, y] : pairs) {
      ++report.checked;
      Scalar lhs = f_alpha.at(x + y);
      Scalar rhs(0);
      for (const auto& [c, fb, fc] : terms) {
        rhs += Scalar(c) * (fb->at(x) * fc->at(y));
      }
      if (!(lhs == rhs)) log.record(alpha, {x, y}, lhs, rhs);
    }
  }
  finish(report);
  return report;
}

VerifyReport verify_multivariable(const TabulatedSequence& seq, std::size_t l,
                                  const VerifyOptions& options) {
  seq.validate();
  if (seq.rank != 1) {
    throw PreconditionError("multi-variable equation needs a rank-1 sequence");
  }
  if (l < 2) throw PreconditionError("multi-variable equation needs l >= 2");
  if (seq.radius() < 1) {
    throw PreconditionError("no nontrivial l-tuples: box radius must be >= 1");
  }
  VerifyReport report;
  FailureLog log(report, options.max_failures);
  report.generator = generator_value(seq);
  if (report.generator == GeneratorValue::zero) {
    check_all_vanish(seq, report, log);
    finish(report);
    return report;
  }

  const auto zero = GroupElement::zero(seq.dim());
  std::vector<const TabulatedFn*> phi;
  for (std::uint32_t n = 0; n <= seq.order; ++n) phi.push_back(&seq.member(MultiIndex{n}));

  // phi_n(0) = 0 for n >= 1 is forced by the equation.
  for (std::uint32_t n = 1; n <= seq.order; ++n) {
    ++report.checked;
    const auto& v = phi[n]->at(zero);
    if (!v.is_zero()) log.record(MultiIndex{n}, {zero}, v, Scalar(0));
  }

  const auto& box = *phi[0];
  std::vector<std::vector<GroupElement>> tuples;
  if (saturating_pow(box.size(), l) <= options.exhaustive_limit) {
    tuples = all_tuples(box, l);
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    // Tuples (x, y, 0, ..., 0) reduce the equation to the two-variable one.
    for (auto& t : sample_tuples(rng, box, 2, options.sample_budget)) {
      t.resize(l, zero);
      tuples.push_back(std::move(t));
    }
    auto random = sample_tuples(rng, box, l, options.sample_budget);
    if (random.empty()) {
      throw PreconditionError("no in-box l-tuples found for l=" + std::to_string(l));
    }
    tuples.insert(tuples.end(), std::make_move_iterator(random.begin()),
                  std::make_move_iterator(random.end()));
  }

  std::vector<std::vector<std::pair<BigInt, std::vector<std::uint32_t>>>> expansions;
  for (std::uint32_t n = 0; n <= seq.order; ++n) {
    auto& terms = expansions.emplace_back();
    for (const auto& k : compositions(n, l)) {
      terms.emplace_back(multinomial(k),
                         std::vector<std::uint32_t>(k.parts().begin(), k.parts().end()));
    }
  }

  for (std::uint32_t n = 0; n <= seq.order; ++n) {
    for (const auto& tuple : tuples) {
      ++report.checked;
      GroupElement sum = zero;
      for (const auto& x : tuple) sum = sum + x;
      Scalar lhs = phi[n]->at(sum);
      Scalar rhs(0);
      for (const auto& [coeff, parts] : expansions[n]) {
        Scalar prod = Scalar(coeff);
        for (std::size_t t = 0; t < l && !prod.is_zero(); ++t) {
          prod *= phi[parts[t]]->at(tuple[t]);
        }
        rhs += prod;
      }
      if (!(lhs == rhs)) log.record(MultiIndex{n}, tuple, lhs, rhs);
    }
  }
  finish(report);
  return report;
}

// ---------------------------------------------------------- reconstruction

AdditiveFn solve_top_additive(const TabulatedSequence& seq,
                              const MultiIndex& alpha, const Exponential& m,
                              const IndexMap<AdditiveFn>& lower,
                              const AdditiveFn& seed) {
  if (alpha.is_zero()) throw PreconditionError("top additive needs |alpha| >= 1");
  const auto& f = seq.member(alpha);
  Polynomial b = mv_bell(alpha).value;
  std::map<VarLabel, AdditiveFn> family;
  for (const auto& v : b.variables()) {
    if (v.mu() == alpha) {
      family.emplace(v, seed);
      continue;
    }
    auto it = lower.find(v.mu());
    if (it == lower.end()) {
      throw PreconditionError("top additive: a_" + v.mu().to_string() +
                              " not yet known");
    }
    family.emplace(v, it->second);
  }
  ClosedFormFn known(Exponential::identity(f.dim()), std::move(b), std::move(family));
  auto residual = TabulatedFn::tabulate(
      f.dim(), f.radius(),
      [&](const GroupElement& x) { return f.at(x) / m(x) - known(x); });
  auto cls = classify_table(residual);
  if (cls.kind != TableClass::Kind::additive) {
    std::string where;
    if (cls.additive_failure) {
      where = " (fails at x=" + cls.additive_failure->x.to_string() +
              ", y=" + cls.additive_failure->y.to_string() + ")";
    }
    throw NotMomentSequence(alpha, cls.additive_failure,
                            "not a moment sequence: residual of f_" +
                                alpha.to_string() + " is not additive" + where);
  }
  return seed + cls.additive();
}

MomentSpec reconstruct(const TabulatedSequence& seq) {
  seq.validate();
  if (seq.radius() < 2) {
    throw PreconditionError("reconstruction needs a box radius >= 2");
  }
  const auto zero_index = MultiIndex::zero(seq.rank);
  auto cls = classify_table(seq.member(zero_index));
  if (cls.kind != TableClass::Kind::exponential) {
    throw NotMomentSequence(zero_index, std::nullopt,
                            "not a moment sequence: f_" + zero_index.to_string() +
                                " is not an exponential");
  }
  MomentSpec spec;
  spec.rank = seq.rank;
  spec.order = seq.order;
  spec.dim = seq.dim();
  spec.exponential = cls.exponential();
  for (const auto& alpha : indices_up_to_height(seq.rank, seq.order)) {
    if (alpha.is_zero()) continue;
    spec.additive.emplace(alpha, solve_top_additive(seq, alpha, spec.exponential,
                                                    spec.additive,
                                                    AdditiveFn::zero(spec.dim)));
  }
  if (!(tabulate(construct(spec), seq.radius()) == seq)) {
    throw ConsistencyError("reconstructed generator data does not reproduce the input");
  }
  return spec;
}

// ---------------------------------------------------------- transformations

ClosedFamily collapse_rank2(const MomentSequence& seq) {
  if (seq.spec.rank != 2) {
    throw PreconditionError("collapse needs a rank-2 sequence, got rank " +
                            std::to_string(seq.spec.rank));
  }
  ClosedFamily out{1, seq.spec.order, {}};
  for (std::uint32_t n = 0; n <= seq.spec.order; ++n) {
    Polynomial p;
    for (std::uint32_t k = 0; k <= n; ++k) {
      p += Scalar(binomial(n, k)) * mv_bell(MultiIndex{k, n - k}).value;
    }
    auto family = family_for(p, seq.spec.additive);
    out.members.emplace(MultiIndex{n}, ClosedFormFn(seq.spec.exponential,
                                                    std::move(p), std::move(family)));
  }
  return out;
}

MomentSequence project_seq(const MomentSequence& seq,
                           const std::set<std::size_t>& keep) {
  if (keep.empty()) throw PreconditionError("projection needs a nonempty keep set");
  for (auto k : keep) {
    if (k >= seq.spec.rank) {
      throw PreconditionError("projection coordinate " + std::to_string(k) +
                              " out of range for rank " +
                              std::to_string(seq.spec.rank));
    }
  }
  std::vector<std::size_t> coords(keep.begin(), keep.end());
  MomentSpec spec;
  spec.rank = coords.size();
  spec.order = seq.spec.order;
  spec.dim = seq.spec.dim;
  spec.exponential = seq.spec.exponential;
  for (const auto& mu : indices_up_to_height(spec.rank, spec.order)) {
    if (mu.is_zero()) continue;
    spec.additive.emplace(mu, seq.spec.additive.at(embed(mu, coords, seq.spec.rank)));
  }
  return construct(spec);
}

MomentSequence normalize(const MomentSequence& seq) {
  MomentSpec spec = seq.spec;
  spec.exponential = Exponential::identity(spec.dim);
  return construct(spec);
}

MomentSpec collapse_spec(const MomentSpec& spec) {
  spec.validate();
  if (spec.rank != 2) throw PreconditionError("collapse needs a rank-2 spec");
  MomentSpec out;
  out.rank = 1;
  out.order = spec.order;
  out.dim = spec.dim;
  out.exponential = spec.exponential;
  for (std::uint32_t j = 1; j <= spec.order; ++j) {
    AdditiveFn b = AdditiveFn::zero(spec.dim);
    for (std::uint32_t k = 0; k <= j; ++k) {
      const auto& a = spec.additive.at(MultiIndex{k, j - k});
      std::vector<Scalar> scaled;
      for (const auto& v : a.gen_values()) scaled.push_back(Scalar(binomial(j, k)) * v);
      b = b + AdditiveFn(std::move(scaled));
    }
    out.additive.emplace(MultiIndex{j}, std::move(b));
  }
  return out;
}

}  // namespace bellmoment
