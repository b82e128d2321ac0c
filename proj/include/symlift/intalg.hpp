#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symlift/perm.hpp"
#include "symlift/rational.hpp"

namespace symlift::intalg {

/// Left end or right end of a half-open interval: -inf, a rational, or +inf.
struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::NegInf, Rational(0)}; }
  static Endpoint pos_inf() { return {Kind::PosInf, Rational(0)}; }
  static Endpoint at(const Rational& r) { return {Kind::Finite, r}; }

  bool operator==(const Endpoint&) const = default;
  bool operator<(const Endpoint& o) const;
  bool operator<=(const Endpoint& o) const { return *this == o || *this < o; }

  std::string str() const;
  static Endpoint parse(const std::string& text);
};

struct Interval {
  Endpoint lo;
  Endpoint hi;  // [lo, hi), lo < hi
  bool operator==(const Interval&) const = default;
};

/// Element of the interval algebra over the rationals: a finite union of
/// half-open intervals kept in normal form, meaning sorted, pairwise
/// disjoint and never touching (adjacent intervals merge). The empty union
/// is 0, the single interval [-inf, +inf) is 1, and equality of elements
/// is structural equality of the normal form.
class BElem {
 public:
  BElem() = default;  // zero
  static BElem zero() { return BElem(); }
  static BElem one();
  static BElem interval(const Endpoint& lo, const Endpoint& hi);
  static BElem interval(const Rational& lo, const Rational& hi);
  /// [n, n+1)
  static BElem unit_block(long long n);
  static BElem from_intervals(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  bool is_one() const;
  bool contains_point(const Rational& q) const;

  bool operator==(const BElem&) const = default;

  /// "0", "1" or ";"-joined "[a,b)" with rational or "-inf"/"+inf" ends.
  std::string str() const;
  static BElem parse(const std::string& text);

 private:
  std::vector<Interval> parts_;
};

BElem join(const BElem& a, const BElem& b);
BElem meet(const BElem& a, const BElem& b);
BElem complement(const BElem& a);
/// a minus b
BElem diff(const BElem& a, const BElem& b);
bool leq(const BElem& a, const BElem& b);

/// The automorphism H(p) of the interval algebra induced by lifting a
/// permutation p of omega to the rationals: negative points are fixed and
/// a non-negative point moves to p(floor) + frac. Unit blocks [n, n+1)
/// therefore travel to [p(n), p(n)+1) rigidly. Applying to an interval
/// with an unbounded non-negative part needs a finitary certificate for p
/// (beyond the support everything is fixed); otherwise the piece budget
/// caps the work and overruns throw.
class InducedAut {
 public:
  explicit InducedAut(perm::ExprPtr p, std::uint64_t piece_budget = 100000);

  Rational apply_point(const Rational& q) const;
  BElem apply(const BElem& x) const;

  const perm::ExprPtr& expr() const { return p_; }

 private:
  perm::ExprPtr p_;
  std::optional<perm::FinPerm> finitary_;
  std::uint64_t piece_budget_;
};

BElem apply_H(const perm::ExprPtr& p, const BElem& x);

/// A permutation together with the support evidence the discriminators
/// need: either its full finite action, or certified enumerations of
/// infinitely many moved and infinitely many fixed integers.
class PhiClass {
 public:
  static PhiClass finitary(const perm::FinPerm& f);
  /// The expression must be an atom carrying both a swap family and a
  /// fixed family.
  static PhiClass certified_infinite(const perm::ExprPtr& e);

  bool is_finitary() const { return fin_.has_value(); }
  const perm::FinPerm& fin() const;
  const perm::ExprPtr& action() const { return action_; }

  perm::Point kth_moved_int(std::uint64_t k) const;
  perm::Point kth_fixed_int(std::uint64_t k) const;

  /// The class of q^-1 p q realized directly: a finite conjugation renames
  /// moved and fixed integers through q and leaves the tail alone.
  PhiClass conjugate_by(const perm::FinPerm& q) const;

 private:
  PhiClass() = default;
  std::optional<perm::FinPerm> fin_;
  std::function<perm::Point(std::uint64_t)> moved_;
  std::function<perm::Point(std::uint64_t)> fixed_;
  perm::ExprPtr action_;
};

struct MovedRegion {
  BElem region;
  /// True when only the window portion of an infinite moved set is shown.
  bool partial;
};

/// Union of the unit blocks the lifted permutation moves: exact for a
/// finitary class, the in-window portion otherwise.
MovedRegion moved_region(const PhiClass& c, perm::Window w);

/// The first-order condition "every nonzero part of u meets a moved
/// point" holds exactly when u sits inside the moved region, which is how
/// it is decided here. Total for both class kinds: an unbounded u always
/// fails against a class with infinitely many fixed blocks.
bool phi_holds(const BElem& u, const PhiClass& c);

struct PsiRefutation {
  enum class Kind { SmallerUpperBound, PhiElementNotBelow };
  Kind kind;
  BElem witness;
};

struct PsiVerdict {
  enum class Kind { SupExists, NoSupEvidence };
  Kind kind;
  /// SupExists: the supremum (it is the largest element of the family).
  BElem sup;
  /// NoSupEvidence: maps any candidate upper bound expressible in the
  /// window to a strictly smaller upper bound or to a family element the
  /// candidate misses.
  std::function<PsiRefutation(const BElem&)> refute;
};

/// Finitary classes have a largest element satisfying the condition (the
/// moved region itself); certified infinite classes admit no supremum, and
/// the verdict carries a bounded refuter. Throws when the window shows
/// fewer than two moved blocks.
PsiVerdict psi_check(const PhiClass& c, perm::Window w);

/// The verdict kind is invariant under conjugating the automorphism, here
/// exercised through finitary conjugators.
bool psi_conjugation_invariance(const PhiClass& c, const perm::FinPerm& q,
                                perm::Window w);

struct KernelWitness {
  BElem a;
  std::array<BElem, 4> subalgebra;  // {0, a, complement(a), 1}
  std::array<BElem, 4> image;
};

/// For a nontrivial finitary p, picks a unit block a moved wholly off
/// itself; the four-element subalgebra generated by a is then moved off
/// itself as a set, witnessing that the induced lattice map is not the
/// identity. Throws for the trivial permutation.
KernelWitness kernel_witness(const perm::FinPerm& p);

}  // namespace symlift::intalg
