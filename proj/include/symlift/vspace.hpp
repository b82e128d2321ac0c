#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symlift/perm.hpp"
#include "symlift/rational.hpp"

namespace symlift::vspace {

/// Field elements are carried as normalized rationals; for finite fields
/// the numerator is the element's code and the denominator is 1. All
/// arithmetic goes through the owning Field, which interprets the codes.
using Scalar = Rational;

enum class FieldAut { Identity, Frobenius };

/// An exact computable field: the rationals, a prime field GF(p) with
/// p <= 97, or GF(4). GF(4) is the one field here with a nontrivial
/// automorphism (Frobenius x -> x^2), which is what makes semilinearity
/// more than linearity. Field axioms and the automorphism property are
/// verified element-by-element for the finite fields on construction.
class Field {
 public:
  static Field rationals();
  static Field prime(int p);
  static Field gf4();
  /// "q" | "rationals" | "gf<p>" | "gf4"
  static Field parse(const std::string& name);

  bool operator==(const Field&) const = default;
  std::string name() const;
  /// 0 for the rationals.
  int order() const;
  bool is_rationals() const { return kind_ == Kind::Rationals; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  bool is_zero(const Scalar& a) const { return a.is_zero(); }

  bool aut_available(FieldAut s) const;
  Scalar apply_aut(FieldAut s, const Scalar& a) const;

  /// Fixed enumeration of the field's elements. Finite fields list their
  /// codes; the rationals go by height: 0, 1, -1, 2, -2, 1/2, -1/2, ...
  Scalar element(std::uint64_t index) const;

  std::string to_string(const Scalar& a) const;

 private:
  enum class Kind { Rationals, Prime, Gf4 };
  Field(Kind k, int p) : kind_(k), p_(p) {}
  void validate(const Scalar& a) const;

  Kind kind_;
  int p_;
};

/// Finitely supported coordinate vector over the fixed basis e_0, e_1, ...
/// No explicit zero entries are stored, so equality is structural.
class Vector {
 public:
  explicit Vector(Field f) : field_(std::move(f)) {}
  static Vector zero(const Field& f) { return Vector(f); }
  static Vector basis(const Field& f, std::size_t i);

  const Field& field() const { return field_; }
  const std::map<std::size_t, Scalar>& coords() const { return coords_; }
  Scalar coord(std::size_t i) const;
  void set_coord(std::size_t i, const Scalar& v);

  bool is_zero() const { return coords_.empty(); }
  std::size_t max_index() const;  // 0 when zero
  std::optional<std::size_t> leading_index() const;  // least nonzero

  Vector add(const Vector& o) const;
  Vector sub(const Vector& o) const;
  Vector scale(const Scalar& a) const;
  Vector negate() const;

  bool operator==(const Vector&) const = default;

  /// "<field>|i:n/d,j:n/d,..."; the zero vector is just "<field>|".
  std::string serialize() const;
  static Vector deserialize(const std::string& text);

 private:
  Field field_;
  std::map<std::size_t, Scalar> coords_;
};

/// Additive bijection twisted by a field automorphism:
/// m(a*u + b*v) = sigma(a)m(u) + sigma(b)m(v). The basis rule is one of:
/// images through a permutation expression, a finite basis-image table
/// (identity elsewhere), or a nonzero scalar times another map.
class SemilinearMap {
 public:
  static SemilinearMap identity(const Field& f);
  static SemilinearMap perm_induced(const Field& f, perm::ExprPtr p,
                                    FieldAut sigma = FieldAut::Identity);
  static SemilinearMap finite_modification(const Field& f,
                                           std::map<std::size_t, Vector> images,
                                           FieldAut sigma = FieldAut::Identity);
  static SemilinearMap scaled(const Scalar& alpha, SemilinearMap m);

  const Field& field() const { return field_; }
  FieldAut sigma() const { return sigma_; }

  Vector apply(const Vector& v) const;
  Vector apply_basis(std::size_t i) const;

  /// Composition in application order: this first, then other. Supported
  /// shapes: scaled maps peel off, permutation-induced maps compose as
  /// expressions, finite modifications compose as tables, and a finitary
  /// permutation converts to a table when mixed with one. Composing an
  /// infinite permutation-induced map with a finite modification has no
  /// closed form here and throws.
  SemilinearMap then(const SemilinearMap& other) const;
  SemilinearMap inverse() const;

  /// The underlying finite permutation when the rule is induced by a
  /// provably finitary expression.
  std::optional<perm::FinPerm> finitary_perm() const;
  /// The permutation expression when the rule is PermInduced (possibly
  /// under scaling).
  perm::ExprPtr induced_expr() const;

 private:
  struct PermRule { perm::ExprPtr p; };
  struct TableRule { std::map<std::size_t, Vector> images; };
  using Rule = std::variant<PermRule, TableRule>;

  SemilinearMap(Field f, FieldAut s, Rule r, Scalar scale)
      : field_(std::move(f)), sigma_(s), rule_(std::move(r)), scale_(scale) {}

  Field field_;
  FieldAut sigma_;
  Rule rule_;
  Scalar scale_;  // never zero
};

SemilinearMap compose(const SemilinearMap& m1, const SemilinearMap& m2);
SemilinearMap invert(const SemilinearMap& m);

/// sigma_1 = sigma_2 and one nonzero alpha scales every basis image inside
/// the window.
bool equivalent_mod_scalar(const SemilinearMap& m1, const SemilinearMap& m2,
                           perm::Window w);

/// Not equivalent to the identity: the image of e_0 is independent of e_0,
/// or some later basis vector picks up a different factor, or the twist is
/// nontrivial. Window-relative in the second case.
bool nsim_identity(const SemilinearMap& m, perm::Window w);

/// A semilinear map up to nonzero scalar: the representative is rescaled
/// so the first nonzero coordinate of the image of e_0 equals 1. Two
/// elements are window-equal exactly when their representatives agree on
/// the window's basis vectors and their twists match.
class GslElement {
 public:
  explicit GslElement(SemilinearMap m);
  const SemilinearMap& rep() const { return rep_; }

  GslElement then(const GslElement& o) const;
  GslElement inverse() const;
  GslElement conj(const GslElement& by) const;   // by^-1 * this * by
  static GslElement comm(const GslElement& a, const GslElement& b);
  GslElement power(long long k) const;

  bool equal_on(const GslElement& o, perm::Window w) const;

 private:
  SemilinearMap rep_;
};

GslElement delta_embed(const Field& f, perm::ExprPtr p);

/// Finitely generated subspace in reduced echelon form: leading entries
/// are 1, leading indices strictly increase, and every leading column is
/// cleared elsewhere. Equal subspaces therefore have identical bases.
class Subspace {
 public:
  static Subspace zero(const Field& f);
  static Subspace span(const Field& f, const std::vector<Vector>& generators);

  const Field& field() const { return field_; }
  const std::vector<Vector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  bool member(const Vector& v) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace&) const = default;

  std::string serialize() const;

 private:
  explicit Subspace(Field f) : field_(std::move(f)) {}
  Field field_;
  std::vector<Vector> basis_;
};

/// Image subspace: the span of the basis images.
Subspace induced(const SemilinearMap& m, const Subspace& s);
Subspace induced(const GslElement& g, const Subspace& s);

/// Membership in the five probe subspaces whose images pin down a lattice
/// automorphism: V1 = even coordinates only, V2 = odd coordinates only,
/// V3 = span(e_2j + e_2j+1), V4 = span(e_2j+1 + e_2j+2), V5 = span(e_2j +
/// a_j e_2j+1) with a_j the field's fixed element enumeration. V4 is
/// decided by echelon reduction over a window of generators; the others by
/// their coordinate characterizations.
bool probe_space_membership(int which, const Vector& v);

/// Every finitary permutation image f satisfies: v - f(v) lies in the span
/// of the moved basis vectors, for every v.
bool property_D_check(const SemilinearMap& m, std::span<const Vector> samples);

/// For a map induced by an expression certifying infinitely many swapped
/// basis pairs, no finite-dimensional subspace can absorb every v - f(v):
/// picks a swapped pair beyond the supports of W's basis and returns the
/// verified witness x with x - f(x) not in W.
Vector refute_property_D(const perm::ExprPtr& infinite_swaps, const Subspace& W);

}  // namespace symlift::vspace
