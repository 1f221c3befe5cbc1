#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bellmoment/errors.hpp"
#include "bellmoment/group.hpp"
#include "bellmoment/multiindex.hpp"

namespace bellmoment {

/// Generator data of a generalized moment sequence of rank r and order N on
/// Z^d: the exponential m and one additive function a_mu for every
/// 1 <= |mu| <= N (zero functions allowed, absent entries are not).
struct MomentSpec {
  std::size_t rank = 1;
  std::uint32_t order = 0;
  std::size_t dim = 1;
  Exponential exponential = Exponential::identity(1);
  IndexMap<AdditiveFn> additive;

  /// Throws PreconditionError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const MomentSpec&, const MomentSpec&) = default;
};

/// Closed-form family f_alpha = B_alpha(a(x)) m(x), |alpha| <= N.
struct MomentSequence {
  MomentSpec spec;
  IndexMap<ClosedFormFn> members;

  /// Throws PreconditionError when |alpha| > N or the rank differs.
  const ClosedFormFn& member(const MultiIndex& alpha) const;
};

/// Closed-form functions indexed by multi-indices of one rank, without
/// generator data attached (e.g. the collapse of a rank-2 sequence).
struct ClosedFamily {
  std::size_t rank = 1;
  std::uint32_t order = 0;
  IndexMap<ClosedFormFn> members;
};

/// Tabulated members f_alpha, |alpha| <= N, all on one shared box.
struct TabulatedSequence {
  std::size_t rank = 1;
  std::uint32_t order = 0;
  IndexMap<TabulatedFn> members;

  std::size_t dim() const;
  std::int64_t radius() const;
  /// Every |alpha| <= N present with matching rank, dimension and radius.
  void validate() const;
  const TabulatedFn& member(const MultiIndex& alpha) const;

  friend bool operator==(const TabulatedSequence&, const TabulatedSequence&) = default;
};

enum class VerifyStatus { pass, zero, fail };

/// Value of the generating function at 0: the dichotomy splits on 0 and 1.
enum class GeneratorValue { one, zero, other };

struct EquationFailure {
  MultiIndex alpha;
  std::vector<GroupElement> points;
  Scalar lhs;
  Scalar rhs;
};

struct VerifyReport {
  VerifyStatus status = VerifyStatus::pass;
  GeneratorValue generator = GeneratorValue::one;
  /// At most VerifyOptions::max_failures entries; failure_count is the total.
  std::vector<EquationFailure> failures;
  std::uint64_t failure_count = 0;
  /// Number of equation instances evaluated.
  std::uint64_t checked = 0;
  bool exhaustive = true;
};

struct VerifyOptions {
  /// Check every in-box pair/tuple when there are at most this many.
  std::uint64_t exhaustive_limit = 100000;
  /// Otherwise check this many seeded, uniformly drawn pairs/tuples.
  std::uint64_t sample_budget = 10000;
  std::uint64_t seed = 0;
  std::size_t max_failures = 16;
};

/// Tabulated data is not a generalized moment sequence. `alpha` is the index
/// at which reconstruction stopped; `witness` the pair breaking additivity of
/// the residual (absent when the generating function itself is rejected).
class NotMomentSequence : public Error {
 public:
  NotMomentSequence(MultiIndex alpha, std::optional<PairWitness> witness,
                    const std::string& what);
  const MultiIndex& alpha() const { return alpha_; }
  const std::optional<PairWitness>& witness() const { return witness_; }

 private:
  MultiIndex alpha_;
  std::optional<PairWitness> witness_;
};

MomentSequence construct(const MomentSpec& spec);

Scalar eval_member(const MomentSequence& seq, const MultiIndex& alpha,
                   const GroupElement& x);

TabulatedSequence tabulate(const MomentSequence& seq, std::int64_t radius);
TabulatedSequence tabulate(const ClosedFamily& family, std::size_t dim,
                           std::int64_t radius);

/// f_alpha(x+y) = sum_{beta<=alpha} C(alpha,beta) f_beta(x) f_{alpha-beta}(y)
/// for every |alpha| <= N over in-box pairs. When f_0(0) = 0 every member
/// must vanish (status zero); any other generator value is checked as is.
VerifyReport verify_rank(const TabulatedSequence& seq,
                         const VerifyOptions& options = {});

/// phi_n(x_1+...+x_l) = sum multinomial(n; k) prod_t phi_{k_t}(x_t) for a
/// rank-1 sequence and n <= N over in-box l-tuples. Also checks phi_n(0) = 0
/// for n >= 1.
VerifyReport verify_multivariable(const TabulatedSequence& seq, std::size_t l,
                                  const VerifyOptions& options = {});

/// Recovers m and every a_alpha by induction on |alpha|. Throws
/// NotMomentSequence when f_0 is not an exponential or a residual is not
/// additive.
MomentSpec reconstruct(const TabulatedSequence& seq);

/// One induction step of the reconstruction: given m and a_mu for all
/// mu < alpha, returns seed + eta where eta is the additive function with
/// f_alpha = (B_alpha(a, seed) + eta) m on the box. The result does not
/// depend on the seed.
AdditiveFn solve_top_additive(const TabulatedSequence& seq,
                              const MultiIndex& alpha, const Exponential& m,
                              const IndexMap<AdditiveFn>& lower,
                              const AdditiveFn& seed);

/// phi_n = sum_k C(n,k) f_{k,n-k}, a rank-1 family of order N.
ClosedFamily collapse_rank2(const MomentSequence& seq);

/// The subfamily indexed by multi-indices supported on `keep` (0-based
/// coordinates), re-indexed to rank |keep|.
MomentSequence project_seq(const MomentSequence& seq,
                           const std::set<std::size_t>& keep);

/// Same additive family, exponential replaced by the identity.
MomentSequence normalize(const MomentSequence& seq);

/// Additive family of the rank-1 sequence equal to collapse_rank2(seq):
/// b_j = sum_{|mu| = j} C(j, mu_1) a_mu.
MomentSpec collapse_spec(const MomentSpec& spec);

}  // namespace bellmoment
