#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace symlift::perm {

using Point = std::uint64_t;

/// Thrown when evaluating a stage-built generator would need stages past
/// the configured bound. Carries the first missing stage code; callers can
/// rebuild with a larger bound and retry.
class StageBudgetError : public std::runtime_error {
 public:
  StageBudgetError(const std::string& what, std::uint64_t needed_stage)
      : std::runtime_error(what), needed_(needed_stage) {}
  std::uint64_t needed_stage() const { return needed_; }

 private:
  std::uint64_t needed_;
};

/// Permutation of omega with finite support. Stored as its nontrivial
/// moves: the table is injective, its key set equals its value set, and
/// fixed points are never stored, so equal permutations compare equal.
class FinPerm {
 public:
  FinPerm() = default;
  explicit FinPerm(const std::map<Point, Point>& moves);

  static FinPerm transposition(Point a, Point b);
  static FinPerm from_cycle(const std::vector<Point>& cycle);
  static FinPerm from_cycles(const std::vector<std::vector<Point>>& cycles);

  Point apply(Point x) const;
  Point apply_inverse(Point y) const;

  FinPerm inverse() const;
  /// Group product under the left-to-right convention: this first, then other.
  FinPerm then(const FinPerm& other) const;
  FinPerm power(long long k) const;

  bool is_identity() const { return moves_.empty(); }
  bool is_involution() const;

  /// Cycle decomposition; every cycle starts at its least point and cycles
  /// are sorted by that least point.
  std::vector<std::vector<Point>> cycles() const;
  /// Multiset of cycle lengths (length -> count), lengths >= 2 only.
  std::map<std::size_t, std::size_t> cycle_type() const;
  std::size_t two_cycle_count() const;
  std::vector<Point> support() const;
  Point max_support() const;  // 0 when identity

  const std::map<Point, Point>& moves() const { return moves_; }
  bool operator==(const FinPerm&) const = default;

 private:
  std::map<Point, Point> moves_;
};

struct SwapPair {
  Point a;
  Point b;
};

/// A named generator with total forward and inverse evaluators, plus the
/// optional structure certificates consumed by classify(), the refutation
/// machinery and the interval-algebra tests. Certificates are promises
/// about the whole (infinite) action, so they are attached only where the
/// construction itself guarantees them.
struct Atom {
  std::string name;
  std::vector<long long> params;
  std::function<Point(Point)> forward;
  std::function<Point(Point)> inverse;

  bool involution = false;
  /// Full action when the support is provably finite.
  std::optional<FinPerm> finitary;
  /// Enumerates the atom's 2-cycles as pairwise disjoint pairs in
  /// increasing position order; present only when provably infinite.
  std::function<SwapPair(std::uint64_t)> swap_family;
  /// k-th fixed point in increasing order; present only when provably
  /// infinite.
  std::function<Point(std::uint64_t)> fixed_family;

  std::string display() const;
};
using AtomPtr = std::shared_ptr<const Atom>;

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct AtomNode { AtomPtr atom; };
struct FinNode { FinPerm perm; };
struct InvNode { ExprPtr inner; };
struct PowNode { ExprPtr base; long long exponent; };
/// Factors apply left to right: Prod([a, b]) sends x to b(a(x)).
struct ProdNode { std::vector<ExprPtr> factors; };
/// target^by, i.e. Prod([by', target, by]) under the product convention.
struct ConjNode { ExprPtr target; ExprPtr by; };
/// [lhs, rhs] = lhs' rhs' lhs rhs.
struct CommNode { ExprPtr lhs; ExprPtr rhs; };

/// Expression over generator atoms, cycle literals and the group
/// combinators. Evaluation of any expression at any point terminates;
/// the only permitted failure is a StageBudgetError from a stage-built
/// atom, which is always reported and never swallowed.
class Expr {
 public:
  using Node = std::variant<AtomNode, FinNode, InvNode, PowNode, ProdNode,
                            ConjNode, CommNode>;
  explicit Expr(Node n) : node_(std::move(n)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr atom(AtomPtr a);
ExprPtr fin(FinPerm f);
ExprPtr inv(ExprPtr e);
ExprPtr pow(ExprPtr e, long long k);
/// A one-element product collapses to its factor; the empty product is the
/// identity expression.
ExprPtr prod(std::vector<ExprPtr> es);
ExprPtr conj(ExprPtr target, ExprPtr by);
ExprPtr comm(ExprPtr a, ExprPtr b);
ExprPtr identity();

/// Structural equality; atoms compare by name and parameters.
bool equal_trees(const Expr& a, const Expr& b);

Point eval(const Expr& e, Point x);
Point eval_inverse(const Expr& e, Point y);

/// The finite point set {0, ..., bound-1}: the desk-scale stand-in for
/// omega. Equality of infinite permutations is only window-semidecidable,
/// so every equality-flavored operation takes one of these explicitly.
struct Window {
  explicit Window(std::uint64_t n) : bound(n) {
    if (n == 0) throw std::invalid_argument("window bound must be >= 1");
  }
  std::uint64_t bound;
};

std::map<Point, Point> window_image(const Expr& e, Window w);

struct CycleProfile {
  /// cycle length -> number of cycles lying entirely inside the window
  std::map<std::uint64_t, std::uint64_t> counts;
  /// window points whose orbit leaves the window, reaches a previously
  /// escaped orbit, or exceeds the step budget before closing
  std::uint64_t escapes = 0;

  std::uint64_t count_of(std::uint64_t len) const {
    auto it = counts.find(len);
    return it == counts.end() ? 0 : it->second;
  }
};

CycleProfile cycle_profile(const Expr& e, Window w, std::uint64_t step_budget);
/// Default step budget is 4 * bound.
CycleProfile cycle_profile(const Expr& e, Window w);

/// Pointwise agreement on the window. Sound for disequality; agreement
/// only certifies equality relative to the window.
bool equal_on(const Expr& a, const Expr& b, Window w);
bool is_identity_on(const Expr& e, Window w);

/// For p, q of identical cycle type, returns h with Conj(p, h) equal to q
/// on any window containing both supports. Throws std::invalid_argument on
/// cycle-type mismatch.
FinPerm conjugator_finitary(const FinPerm& p, const FinPerm& q);

struct ClassVerdict {
  enum class Kind { FinTwoCycles, InfEvidence, Unknown };
  Kind kind = Kind::Unknown;
  std::uint64_t count = 0;   // FinTwoCycles: exact; InfEvidence: at window
  std::uint64_t window = 0;  // InfEvidence only
};

/// Full action of e when e is provably of finite support: built from
/// cycle literals and finitary-certified atoms under combinators that
/// preserve finite support. Conj(x, y) and one-sided commutators count,
/// since a conjugate of a finitary permutation is finitary no matter what
/// it is conjugated by. Returns nullopt when no certificate can be derived.
std::optional<FinPerm> finitary_closure(const Expr& e);

/// FinTwoCycles(k) when a finitary certificate exists; InfEvidence when
/// the in-window 2-cycle count reaches the threshold without one; Unknown
/// otherwise.
ClassVerdict classify(const Expr& e, Window w, std::uint64_t evidence_threshold);

/// Registry of generator names available to the text format. Names may be
/// plain atoms or one-integer-parameter families such as p[n]. Re-adding a
/// name rebinds it.
class AtomRegistry {
 public:
  void add(AtomPtr a);
  void add_family(const std::string& name,
                  std::function<AtomPtr(long long)> make);
  bool has(const std::string& name) const;
  bool has_family(const std::string& name) const;
  AtomPtr get(const std::string& name) const;
  AtomPtr get(const std::string& name, long long param) const;
  std::vector<std::string> plain_names() const;
  std::vector<std::string> family_names() const;

 private:
  std::map<std::string, AtomPtr> atoms_;
  std::map<std::string, std::function<AtomPtr(long long)>> families_;
};

// Context-free atoms.
AtomPtr atom_identity();  // "id"
AtomPtr atom_tau();       // (0, 1)
AtomPtr atom_z();         // one fixed point, one infinite cycle
AtomPtr atom_swapadj();   // (2j, 2j+1) for every j
AtomPtr atom_blk();       // (4j, 4j+1) for every j, rest fixed

/// id, tau, z, swapadj, blk.
AtomRegistry base_registry();

}  // namespace symlift::perm
