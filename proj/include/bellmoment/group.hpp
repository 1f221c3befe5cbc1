#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "bellmoment/polynomial.hpp"
#include "bellmoment/scalar.hpp"

namespace bellmoment {

/// Element of Z^d.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit GroupElement(std::vector<std::int64_t> coords)
      : coords_(std::move(coords)) {}

  static GroupElement zero(std::size_t dim);
  static GroupElement unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;
  /// max_i |x_i|
  std::int64_t sup_norm() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

using PointFn = std::function<Scalar(const GroupElement&)>;

/// m(x) = prod_i c_i^{x_i} with nonzero bases c_i.
class Exponential {
 public:
  explicit Exponential(std::vector<Scalar> bases);
  /// The exponential identically one on Z^d.
  static Exponential identity(std::size_t dim);

  std::size_t dim() const { return bases_.size(); }
  const std::vector<Scalar>& bases() const { return bases_; }
  Scalar operator()(const GroupElement& x) const;

  friend bool operator==(const Exponential&, const Exponential&) = default;

 private:
  std::vector<Scalar> bases_;
};

/// a(x) = sum_i v_i x_i.
class AdditiveFn {
 public:
  explicit AdditiveFn(std::vector<Scalar> gen_values);
  static AdditiveFn zero(std::size_t dim);

  std::size_t dim() const { return values_.size(); }
  const std::vector<Scalar>& gen_values() const { return values_; }
  bool is_zero() const;
  Scalar operator()(const GroupElement& x) const;

  AdditiveFn operator+(const AdditiveFn& rhs) const;

  friend bool operator==(const AdditiveFn&, const AdditiveFn&) = default;

 private:
  std::vector<Scalar> values_;
};

Scalar eval_exponential(const Exponential& m, const GroupElement& x);
Scalar eval_additive(const AdditiveFn& a, const GroupElement& x);

/// P(a(x)) * m(x): a polynomial in labelled variables, each bound to an
/// additive function.
struct ClosedFormFn {
  ClosedFormFn(Exponential exponential, Polynomial coeff_poly,
               std::map<VarLabel, AdditiveFn> additive_family);

  Exponential exponential;
  Polynomial coeff_poly;
  std::map<VarLabel, AdditiveFn> additive_family;

  std::size_t dim() const { return exponential.dim(); }
  Scalar operator()(const GroupElement& x) const;
};

Scalar eval_closed(const ClosedFormFn& f, const GroupElement& x);

/// Values of a function on the box { x in Z^d : |x|_inf <= radius }.
/// Points are stored in lexicographic order.
class TabulatedFn {
 public:
  /// All values zero.
  TabulatedFn(std::size_t dim, std::int64_t radius);
  static TabulatedFn tabulate(std::size_t dim, std::int64_t radius,
                              const PointFn& f);

  std::size_t dim() const { return dim_; }
  std::int64_t radius() const { return radius_; }
  std::size_t size() const { return values_.size(); }

  bool contains(const GroupElement& x) const;
  /// Throws OutOfDomainError outside the box.
  const Scalar& at(const GroupElement& x) const;
  void set(const GroupElement& x, Scalar v);
  Scalar operator()(const GroupElement& x) const { return at(x); }

  /// i-th point in lexicographic order, and its value.
  GroupElement point(std::size_t i) const;
  const Scalar& value(std::size_t i) const { return values_[i]; }
  std::vector<GroupElement> points() const;

  bool is_identically_zero() const;

  friend bool operator==(const TabulatedFn&, const TabulatedFn&) = default;

 private:
  std::size_t offset(const GroupElement& x) const;

  std::size_t dim_;
  std::int64_t radius_;
  std::vector<Scalar> values_;
};

struct PairWitness {
  GroupElement x;
  GroupElement y;
};

/// Result of testing a table against the exponential and additive
/// functional equations on every in-box pair.
struct TableClass {
  enum class Kind { exponential, additive, neither };
  Kind kind = Kind::neither;
  std::variant<std::monostate, Exponential, AdditiveFn> generator;
  /// First in-box pair (x, y) violating a(x+y) = a(x) + a(y), or a point x
  /// (with y = 0) where the table disagrees with the additive function read
  /// off at the basis vectors. Set whenever kind != additive.
  std::optional<PairWitness> additive_failure;

  const Exponential& exponential() const { return std::get<Exponential>(generator); }
  const AdditiveFn& additive() const { return std::get<AdditiveFn>(generator); }
};

/// Throws PreconditionError when the radius is 0.
TableClass classify_table(const TabulatedFn& t);

/// Calls visit(x, y) for every pair of box points whose sum stays in the box,
/// in lexicographic order of (x, y).
void for_each_inbox_pair(
    const TabulatedFn& t,
    const std::function<void(const GroupElement&, const GroupElement&)>& visit);

/// Number of in-box pairs of a box of the given shape.
std::uint64_t inbox_pair_count(std::size_t dim, std::int64_t radius);

}  // namespace bellmoment
