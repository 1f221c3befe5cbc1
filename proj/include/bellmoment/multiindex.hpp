#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bellmoment {

using BigInt = mpz_class;

/// Element of N^r. The rank is fixed at construction.
///
/// Equality is componentwise. MultiIndex deliberately has no operator<: the
/// natural order on N^r is the partial order `is_below`, while containers use
/// the total graded-lexicographic order through `GradedLex`.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<std::uint32_t> entries);
  explicit MultiIndex(std::vector<std::uint32_t> entries);

  static MultiIndex zero(std::size_t rank);
  /// Unit vector e_i (0-based coordinate).
  static MultiIndex unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return entries_.size(); }
  std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::uint32_t> entries() const { return entries_; }

  /// |alpha| = sum of entries.
  std::uint64_t height() const;
  bool is_zero() const { return height() == 0; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// Componentwise sum / difference. Difference requires rhs <= lhs.
  MultiIndex operator+(const MultiIndex& rhs) const;
  MultiIndex operator-(const MultiIndex& rhs) const;

  /// Comma separated entries, e.g. "2,1".
  std::string to_string() const;
  /// Parses "2,1" (whitespace tolerated). Throws FormatError.
  static MultiIndex parse(const std::string& text);

 private:
  std::vector<std::uint32_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& alpha);

/// Three-way graded-lexicographic comparison: rank, then height, then
/// entries lexicographically.
std::strong_ordering graded_lex_compare(const MultiIndex& a,
                                        const MultiIndex& b);

struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_compare(a, b) < 0;
  }
};

template <class T>
using IndexMap = std::map<MultiIndex, T, GradedLex>;

/// A tuple of l >= 2 nonnegative parts together with the integer they sum to.
class LComposition {
 public:
  LComposition(std::vector<std::uint32_t> parts, std::uint64_t target);

  std::span<const std::uint32_t> parts() const { return parts_; }
  std::uint64_t target() const { return target_; }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const LComposition&, const LComposition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t target_;
};

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// n! / prod(k_i!). Any number of parts (>= 1) is accepted; throws
/// PreconditionError when the parts do not sum to n.
BigInt multinomial(std::uint64_t n, std::span<const std::uint32_t> parts);
BigInt multinomial(const LComposition& composition);

/// alpha! = prod_k alpha_k!
BigInt factorial(const MultiIndex& alpha);

/// prod_k C(alpha_k, beta_k); zero unless beta <= alpha.
BigInt binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// Componentwise beta <= alpha. Throws PreconditionError on rank mismatch.
bool is_below(const MultiIndex& beta, const MultiIndex& alpha);
/// beta <= alpha and beta != alpha.
bool is_strictly_below(const MultiIndex& beta, const MultiIndex& alpha);

/// Every beta <= alpha, graded-lex order. Size prod(alpha_k + 1).
std::vector<MultiIndex> indices_below(const MultiIndex& alpha);

/// Every multi-index of the given rank with height <= max_height, graded-lex.
std::vector<MultiIndex> indices_up_to_height(std::size_t rank,
                                             std::uint64_t max_height);

/// All l-tuples of nonnegative integers summing to n, lexicographic order.
/// Throws PreconditionError when l < 2.
std::vector<LComposition> compositions(std::uint64_t n, std::size_t l);

/// Keeps the coordinates listed in `keep` (0-based) and zeroes the rest.
/// Throws PreconditionError when a coordinate is out of range.
MultiIndex project(const MultiIndex& alpha, const std::set<std::size_t>& keep);

}  // namespace bellmoment
