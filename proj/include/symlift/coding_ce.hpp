#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlift/perm.hpp"

namespace symlift::ce {

/// Bijection between Z x omega and omega. Column i becomes the point set
/// R_i = {encode(i,0) < encode(i,1) < ...}; encoding is strictly increasing
/// in the index for a fixed column, so each column enumerates its points
/// in order.
struct ColumnSchemeZ {
  perm::Point encode(long long column, std::uint64_t index) const;
  std::pair<long long, std::uint64_t> decode(perm::Point p) const;
};

/// Cantor pairing against the zig-zag folded column.
ColumnSchemeZ default_scheme_z();

/// Enumeration h of a set A, materialized up to a stage horizon. h is
/// injective where defined; stages may be gaps (nothing enumerated). The
/// verdict types downstream keep the horizon explicit: membership is only
/// ever known up to it.
class Enumerator {
 public:
  static Enumerator evens(std::uint64_t horizon);           // h(t) = 2t
  static Enumerator empty(std::uint64_t horizon);
  static Enumerator primes25();                             // first 25 primes
  static Enumerator from_pairs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& stage_value,
                               std::uint64_t horizon, std::string name = "table");
  /// Text file with lines "t n"; '#' starts a comment. The horizon is
  /// max listed stage + 1 unless a larger one is supplied.
  static Enumerator from_file(const std::string& path,
                              std::optional<std::uint64_t> horizon = std::nullopt);
  /// "evens" | "empty" | "primes25"
  static Enumerator named(const std::string& name, std::uint64_t horizon);

  std::uint64_t horizon() const { return horizon_; }
  const std::string& name() const { return name_; }
  std::optional<std::uint64_t> value_at(std::uint64_t stage) const;
  std::optional<std::uint64_t> stage_of(std::uint64_t value) const;
  std::size_t enumerated_count() const;

  /// Independent expected answer for the named sample sets ("was n
  /// enumerated by the horizon"), computed from the defining rule, not
  /// from the table. nullopt for file/table enumerators.
  std::optional<bool> ground_truth(std::uint64_t n) const;

 private:
  Enumerator() = default;
  void check_injective() const;

  std::string name_;
  std::uint64_t horizon_ = 0;
  std::vector<std::optional<std::uint64_t>> values_;  // stage -> value
};

// The coding generators. w shifts every column up by one; g0 and g1 are
// the two interleaved pairings of column 0; b pairs (c_n^t, c_n^{t+1})
// exactly when h(t) = n. With h injective those transpositions are
// pairwise disjoint, so b is a well-defined involution.
perm::ExprPtr gen_w(const ColumnSchemeZ& s);
perm::ExprPtr gen_g0(const ColumnSchemeZ& s);
perm::ExprPtr gen_g1(const ColumnSchemeZ& s);
perm::ExprPtr gen_b(const ColumnSchemeZ& s, const Enumerator& e);

/// Registers w, g0, g1, b for the text format.
void register_atoms(perm::AtomRegistry& reg, const ColumnSchemeZ& s,
                    const Enumerator& e);

struct DecodeVerdict {
  enum class Kind { In, NotByHorizon };
  Kind kind;
  /// In: the witnessing stage; NotByHorizon: the horizon checked.
  std::uint64_t stage;

  bool in() const { return kind == Kind::In; }
};

struct CommutatorProbe {
  bool g0_noncommuting = false;
  bool g1_noncommuting = false;
  bool any() const { return g0_noncommuting || g1_noncommuting; }
};

/// Smallest window that contains the column-0 points of index <= max_index.
std::uint64_t window_covering_column0(const ColumnSchemeZ& s, std::uint64_t max_index);

/// Evaluates [g0, b^{w^-n}] and [g1, b^{w^-n}] on the column-0 points the
/// construction can touch. The product convention here is left-to-right,
/// which reverses the handedness of conjugation relative to right-to-left
/// composition; the exponent -n is what transports b's column-n action
/// onto column 0, where g0 and g1 can see it. Both commutators fix
/// everything outside column 0, so the check is exact relative to the
/// horizon. The window must cover column-0 indices up to horizon + 2.
CommutatorProbe probe_commutators(std::uint64_t n, const ColumnSchemeZ& s,
                                  const Enumerator& e, perm::Window w);

/// In(t) as soon as either commutator is non-identity, with t recovered
/// from the enumerator; NotByHorizon otherwise.
DecodeVerdict decode_membership(std::uint64_t n, const ColumnSchemeZ& s,
                                const Enumerator& e, perm::Window w);

}  // namespace symlift::ce
