#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlift/perm.hpp"

namespace symlift::pi2 {

/// Bijection between Z x {1,2} x omega and omega. Column i splits into a
/// left part (1) and a right part (2); for a fixed column and part the
/// encoding is strictly increasing in k.
struct ColumnScheme2 {
  struct Pos {
    long long column;
    int part;  // 1 or 2
    std::uint64_t k;
  };
  perm::Point encode(long long column, int part, std::uint64_t k) const;
  Pos decode(perm::Point p) const;
};

ColumnScheme2 default_scheme_2();

/// Total computable relation R(n, t) defining A = {n : R(n, t) holds for
/// infinitely many t}, supplied as one of the built-in rules or a finite
/// table. The built-ins also carry their known answers and, where the
/// rule makes the count provably final, a stabilization certificate.
class Pi2Predicate {
 public:
  static Pi2Predicate always();
  static Pi2Predicate never();
  static Pi2Predicate below_column();  // R(n, t) iff t < n  ("lt")
  static Pi2Predicate even_column();   // R(n, t) iff n is even
  static Pi2Predicate from_table(
      const std::vector<std::tuple<std::uint64_t, std::uint64_t, bool>>& rows);
  /// Lines "n t 0|1"; unlisted pairs are false.
  static Pi2Predicate from_file(const std::string& path);
  /// "always" | "never" | "lt" | "even" | "table:<path>" | "@<path>"
  static Pi2Predicate named(const std::string& name);

  bool holds(std::uint64_t n, std::uint64_t t) const;
  const std::string& name() const { return name_; }

  /// Known membership of n in A for the built-in rules; nullopt for tables
  /// loaded without a rule... tables define finite support, so membership
  /// is false for every n.
  std::optional<bool> truth_class(std::uint64_t n) const;

  /// Final number of true stages for column n when that count is provably
  /// complete once all stage codes below stage_bound have run; nullopt if
  /// the rule cannot certify stability at this bound.
  std::optional<std::uint64_t> stabilized_count(std::uint64_t n,
                                                std::uint64_t stage_bound) const;

 private:
  enum class Rule { Always, Never, BelowColumn, EvenColumn, Table };
  Pi2Predicate(Rule r, std::string name) : rule_(r), name_(std::move(name)) {}

  Rule rule_;
  std::string name_;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, bool>> table_;
};

/// Stage code for the pair (n, t); stages are processed in code order.
std::uint64_t stage_code(std::uint64_t n, std::uint64_t t);
std::pair<std::uint64_t, std::uint64_t> stage_decode(std::uint64_t code);

/// The stagewise construction of b, run eagerly to max_stage and immutable
/// afterwards. Stage 0 fixes the negative columns; stage with code <n,t>
/// takes the three least unused elements p < q < r of the right part of
/// column n, pairs p and q when R(n, t) holds, and fixes r (and fixes all
/// three otherwise). Left parts and never-consumed elements are fixed.
/// Prefixes are stable: larger bounds extend, never revise.
class StageConstruction {
 public:
  StageConstruction(ColumnScheme2 scheme, Pi2Predicate relation,
                    std::uint64_t max_stage);

  /// Throws perm::StageBudgetError when deciding x needs a stage code
  /// >= max_stage.
  perm::Point apply(perm::Point x) const;

  std::uint64_t max_stage() const { return max_stage_; }
  const ColumnScheme2& scheme() const { return scheme_; }
  const Pi2Predicate& relation() const { return relation_; }

  /// Number of pairs committed in the right part of the column so far.
  std::uint64_t two_cycle_count(std::uint64_t column) const;
  /// Right-part elements consumed for the column: 3 per stage touching it.
  std::uint64_t consumed(std::uint64_t column) const;
  /// Stages of the form <column, t> that have run.
  std::uint64_t stage_count(std::uint64_t column) const;
  std::vector<perm::SwapPair> column_pairs(std::uint64_t column) const;

 private:
  ColumnScheme2 scheme_;
  Pi2Predicate relation_;
  std::uint64_t max_stage_;
  std::map<perm::Point, perm::Point> pairs_;
  std::map<std::uint64_t, std::uint64_t> pair_count_;
  std::map<std::uint64_t, std::uint64_t> stage_count_;
};

std::shared_ptr<const StageConstruction> build_stages(const ColumnScheme2& s,
                                                      const Pi2Predicate& r,
                                                      std::uint64_t max_stage);

/// The constructed b as an expression atom.
perm::ExprPtr build_b(const ColumnScheme2& s, const Pi2Predicate& r,
                      std::uint64_t max_stage);
perm::ExprPtr build_b(std::shared_ptr<const StageConstruction> st);

/// |{t : <n,t> < stage_bound and R(n,t)}| through the construction's own
/// bookkeeping.
std::uint64_t two_cycle_count(std::uint64_t n, const Pi2Predicate& r,
                              std::uint64_t stage_bound);

// Generators: w shifts every column down by one (both parts); p0 swaps the
// two parts of column 0 pointwise; p_n does the same on column n. gen_pn
// returns the conjugation expression p0^{w^-n}; under the left-to-right
// product convention that is the exponent that moves column n onto column
// 0 and back. The atom family p[n] computes the same action in closed
// form.
perm::ExprPtr gen_w3(const ColumnScheme2& s);
perm::ExprPtr gen_p0(const ColumnScheme2& s);
perm::ExprPtr gen_pn(const ColumnScheme2& s, std::uint64_t n);
perm::ExprPtr gen_z();

perm::AtomPtr atom_p0(const ColumnScheme2& s);
perm::AtomPtr atom_pn(const ColumnScheme2& s, long long n);

/// Registers w, p0 and the family p[n]; z and tau are context-free and
/// live in the base registry.
void register_atoms(perm::AtomRegistry& reg, const ColumnScheme2& s);
void register_b(perm::AtomRegistry& reg, std::shared_ptr<const StageConstruction> st);

/// A word over tau and z only that evaluates to the transposition (n, m)
/// everywhere. Throws std::invalid_argument when n == m.
perm::ExprPtr transposition_word(std::uint64_t n, std::uint64_t m);

/// A word over tau and z for an arbitrary finitary involution: the product
/// of the words of its 2-cycles. Throws when f is not an involution.
perm::ExprPtr finword_for(const perm::FinPerm& f);

/// Smallest window containing both parts of the column up to index max_k.
std::uint64_t window_covering_column(const ColumnScheme2& s, std::uint64_t column,
                                     std::uint64_t max_k);

/// Cycle profile of b * b^{p_n} restricted to column n within the window.
/// Verifies that every window point outside the column is fixed.
perm::CycleProfile product_on_column(std::uint64_t n, const Pi2Predicate& r,
                                     std::uint64_t max_stage, perm::Window w);

/// FinTwoCycles(k) when the rule certifies the count stabilized at k by
/// this stage bound; InfEvidence when the running count reaches the
/// threshold; Unknown otherwise. The certificate wins over the threshold,
/// since a large-but-final count is still a finite answer.
perm::ClassVerdict decode_at_horizon(std::uint64_t n, const Pi2Predicate& r,
                                     std::uint64_t stage_bound,
                                     std::uint64_t threshold);

}  // namespace symlift::pi2
