#include "symlift/coding_pi2.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "symlift/pairing.hpp"

namespace symlift::pi2 {

using perm::Point;

perm::Point ColumnScheme2::encode(long long column, int part, std::uint64_t k) const {
  if (part != 1 && part != 2)
    throw std::invalid_argument("column part must be 1 or 2");
  return cantor_pair(2 * fold_int(column) + static_cast<std::uint64_t>(part - 1), k);
}

ColumnScheme2::Pos ColumnScheme2::decode(perm::Point p) const {
  auto [a, k] = cantor_unpair(p);
  return {unfold_int(a / 2), static_cast<int>(a % 2) + 1, k};
}

ColumnScheme2 default_scheme_2() { return ColumnScheme2{}; }

// ---------------------------------------------------------------------------
// Predicates

Pi2Predicate Pi2Predicate::always() { return {Rule::Always, "always"}; }
Pi2Predicate Pi2Predicate::never() { return {Rule::Never, "never"}; }
Pi2Predicate Pi2Predicate::below_column() { return {Rule::BelowColumn, "lt"}; }
Pi2Predicate Pi2Predicate::even_column() { return {Rule::EvenColumn, "even"}; }

Pi2Predicate Pi2Predicate::from_table(
    const std::vector<std::tuple<std::uint64_t, std::uint64_t, bool>>& rows) {
  Pi2Predicate p{Rule::Table, "table"};
  p.table_ = rows;
  return p;
}

Pi2Predicate Pi2Predicate::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open predicate file: " + path);
  std::vector<std::tuple<std::uint64_t, std::uint64_t, bool>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::uint64_t n, t;
    int bit;
    if (ls >> n >> t >> bit) rows.emplace_back(n, t, bit != 0);
  }
  auto p = from_table(rows);
  p.name_ = "table:" + path;
  return p;
}

Pi2Predicate Pi2Predicate::named(const std::string& name) {
  if (name == "always") return always();
  if (name == "never") return never();
  if (name == "lt") return below_column();
  if (name == "even") return even_column();
  if (name.rfind("table:", 0) == 0) return from_file(name.substr(6));
  if (name.rfind('@', 0) == 0) return from_file(name.substr(1));
  throw std::invalid_argument("unknown predicate name: " + name);
}

bool Pi2Predicate::holds(std::uint64_t n, std::uint64_t t) const {
  switch (rule_) {
    case Rule::Always: return true;
    case Rule::Never: return false;
    case Rule::BelowColumn: return t < n;
    case Rule::EvenColumn: return n % 2 == 0;
    case Rule::Table:
      for (const auto& [rn, rt, rv] : table_)
        if (rn == n && rt == t) return rv;
      return false;
  }
  return false;
}

std::optional<bool> Pi2Predicate::truth_class(std::uint64_t n) const {
  switch (rule_) {
    case Rule::Always: return true;
    case Rule::Never: return false;
    case Rule::BelowColumn: return false;   // finitely many true stages per n
    case Rule::EvenColumn: return n % 2 == 0;
    case Rule::Table: return false;         // finite support
  }
  return std::nullopt;
}

std::optional<std::uint64_t> Pi2Predicate::stabilized_count(
    std::uint64_t n, std::uint64_t stage_bound) const {
  switch (rule_) {
    case Rule::Always:
      return std::nullopt;
    case Rule::Never:
      return 0;
    case Rule::BelowColumn: {
      if (n == 0) return 0;
      // all true stages have codes <n,t> with t < n
      if (stage_code(n, n - 1) < stage_bound) return n;
      return std::nullopt;
    }
    case Rule::EvenColumn:
      if (n % 2 == 1) return 0;
      return std::nullopt;
    case Rule::Table: {
      std::uint64_t count = 0;
      for (const auto& [rn, rt, rv] : table_) {
        if (rn != n || !rv) continue;
        if (stage_code(rn, rt) >= stage_bound) return std::nullopt;
        ++count;
      }
      return count;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Stage construction

std::uint64_t stage_code(std::uint64_t n, std::uint64_t t) {
  return cantor_pair(n, t);
}

std::pair<std::uint64_t, std::uint64_t> stage_decode(std::uint64_t code) {
  return cantor_unpair(code);
}

StageConstruction::StageConstruction(ColumnScheme2 scheme, Pi2Predicate relation,
                                     std::uint64_t max_stage)
    : scheme_(scheme), relation_(std::move(relation)), max_stage_(max_stage) {
  for (std::uint64_t code = 0; code < max_stage_; ++code) {
    auto [n, t] = stage_decode(code);
    std::uint64_t seen = stage_count_[n];
    // Codes for a fixed column arrive in increasing t, so the stage about
    // to run for column n is always its t-th one.
    assert(seen == t);
    (void)t;
    std::uint64_t base = 3 * seen;
    if (relation_.holds(n, t)) {
      Point p = scheme_.encode(static_cast<long long>(n), 2, base);
      Point q = scheme_.encode(static_cast<long long>(n), 2, base + 1);
      pairs_[p] = q;
      pairs_[q] = p;
      ++pair_count_[n];
    }
    // r = index base + 2 stays fixed in both cases.
    ++stage_count_[n];
  }
}

perm::Point StageConstruction::apply(perm::Point x) const {
  auto pos = scheme_.decode(x);
  if (pos.column < 0 || pos.part == 1) return x;
  std::uint64_t n = static_cast<std::uint64_t>(pos.column);
  std::uint64_t needed = stage_code(n, pos.k / 3);
  if (needed >= max_stage_)
    throw perm::StageBudgetError(
        "stage-built b: deciding point " + std::to_string(x) +
            " needs stage code " + std::to_string(needed) +
            " but the construction stops at " + std::to_string(max_stage_),
        needed);
  auto it = pairs_.find(x);
  return it == pairs_.end() ? x : it->second;
}

std::uint64_t StageConstruction::two_cycle_count(std::uint64_t column) const {
  auto it = pair_count_.find(column);
  return it == pair_count_.end() ? 0 : it->second;
}

std::uint64_t StageConstruction::consumed(std::uint64_t column) const {
  return 3 * stage_count(column);
}

std::uint64_t StageConstruction::stage_count(std::uint64_t column) const {
  auto it = stage_count_.find(column);
  return it == stage_count_.end() ? 0 : it->second;
}

std::vector<perm::SwapPair> StageConstruction::column_pairs(std::uint64_t column) const {
  std::vector<perm::SwapPair> out;
  for (std::uint64_t t = 0; stage_code(column, t) < max_stage_; ++t) {
    if (!relation_.holds(column, t)) continue;
    std::uint64_t base = 3 * t;
    out.push_back({scheme_.encode(static_cast<long long>(column), 2, base),
                   scheme_.encode(static_cast<long long>(column), 2, base + 1)});
  }
  return out;
}

std::shared_ptr<const StageConstruction> build_stages(const ColumnScheme2& s,
                                                      const Pi2Predicate& r,
                                                      std::uint64_t max_stage) {
  return std::make_shared<StageConstruction>(s, r, max_stage);
}

perm::ExprPtr build_b(std::shared_ptr<const StageConstruction> st) {
  auto a = std::make_shared<perm::Atom>();
  a->name = "b";
  auto f = [st](Point x) { return st->apply(x); };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  return perm::atom(a);
}

perm::ExprPtr build_b(const ColumnScheme2& s, const Pi2Predicate& r,
                      std::uint64_t max_stage) {
  return build_b(build_stages(s, r, max_stage));
}

std::uint64_t two_cycle_count(std::uint64_t n, const Pi2Predicate& r,
                              std::uint64_t stage_bound) {
  return StageConstruction(default_scheme_2(), r, stage_bound).two_cycle_count(n);
}

// ---------------------------------------------------------------------------
// Generators

perm::ExprPtr gen_w3(const ColumnScheme2& s) {
  auto a = std::make_shared<perm::Atom>();
  a->name = "w";
  a->forward = [s](Point x) {
    auto pos = s.decode(x);
    return s.encode(pos.column - 1, pos.part, pos.k);
  };
  a->inverse = [s](Point x) {
    auto pos = s.decode(x);
    return s.encode(pos.column + 1, pos.part, pos.k);
  };
  return perm::atom(a);
}

perm::AtomPtr atom_pn(const ColumnScheme2& s, long long n) {
  auto a = std::make_shared<perm::Atom>();
  a->name = n == 0 ? "p0" : "p";
  if (n != 0) a->params = {n};
  auto f = [s, n](Point x) {
    auto pos = s.decode(x);
    if (pos.column != n) return x;
    return s.encode(n, pos.part == 1 ? 2 : 1, pos.k);
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  return a;
}

perm::AtomPtr atom_p0(const ColumnScheme2& s) { return atom_pn(s, 0); }

perm::ExprPtr gen_p0(const ColumnScheme2& s) { return perm::atom(atom_p0(s)); }

perm::ExprPtr gen_pn(const ColumnScheme2& s, std::uint64_t n) {
  // p0 conjugated by w^-n; the inverse power transports column n onto
  // column 0 before p0 acts and back after.
  return perm::conj(gen_p0(s), perm::pow(gen_w3(s), -static_cast<long long>(n)));
}

perm::ExprPtr gen_z() { return perm::atom(perm::atom_z()); }

void register_atoms(perm::AtomRegistry& reg, const ColumnScheme2& s) {
  auto atom_of = [](const perm::ExprPtr& expr) {
    return std::get<perm::AtomNode>(expr->node()).atom;
  };
  reg.add(atom_of(gen_w3(s)));
  reg.add(atom_p0(s));
  reg.add_family("p", [s](long long n) { return atom_pn(s, n); });
}

void register_b(perm::AtomRegistry& reg, std::shared_ptr<const StageConstruction> st) {
  reg.add(std::get<perm::AtomNode>(build_b(std::move(st))->node()).atom);
}

// ---------------------------------------------------------------------------
// Transposition words over tau and z

namespace {

// Word for (0, m), m >= 1. Conjugating tau = (0, 1) by z^k maps its support
// through z^k, and the z-chain puts 2k at z^-k(1) and 2k+1 at z^k(1), so
// even targets take negative exponents and odd ones positive.
perm::ExprPtr word_zero_to(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("transposition word: 0 = 0");
  if (m == 1) return perm::atom(perm::atom_tau());
  long long k = m % 2 == 0 ? -static_cast<long long>(m / 2)
                           : static_cast<long long>((m - 1) / 2);
  return perm::conj(perm::atom(perm::atom_tau()), perm::pow(gen_z(), k));
}

}  // namespace

perm::ExprPtr transposition_word(std::uint64_t n, std::uint64_t m) {
  if (n == m)
    throw std::invalid_argument("transposition word needs two distinct points");
  if (n > m) std::swap(n, m);
  if (n == 0) return word_zero_to(m);
  // (n, m) is (0, m) conjugated by (0, n): the conjugator swaps 0 into
  // place and the support follows.
  return perm::conj(word_zero_to(m), word_zero_to(n));
}

perm::ExprPtr finword_for(const perm::FinPerm& f) {
  if (!f.is_involution())
    throw std::invalid_argument("finword_for expects an involution");
  std::vector<perm::ExprPtr> words;
  for (const auto& c : f.cycles()) {
    if (c.size() != 2)
      throw std::invalid_argument("finword_for expects an involution");
    words.push_back(transposition_word(c[0], c[1]));
  }
  if (words.size() == 1) return words.front();
  return perm::prod(std::move(words));
}

// ---------------------------------------------------------------------------
// Column-level decoding

std::uint64_t window_covering_column(const ColumnScheme2& s, std::uint64_t column,
                                     std::uint64_t max_k) {
  auto c = static_cast<long long>(column);
  return std::max(s.encode(c, 1, max_k), s.encode(c, 2, max_k)) + 1;
}

perm::CycleProfile product_on_column(std::uint64_t n, const Pi2Predicate& r,
                                     std::uint64_t max_stage, perm::Window w) {
  auto s = default_scheme_2();
  auto st = build_stages(s, r, max_stage);
  auto b = build_b(st);
  auto mirrored = perm::conj(b, gen_pn(s, n));
  auto product = perm::prod({b, mirrored});

  std::vector<Point> column_points;
  for (Point x = 0; x < w.bound; ++x) {
    auto pos = s.decode(x);
    if (pos.column == static_cast<long long>(n)) {
      column_points.push_back(x);
      continue;
    }
    // Off-column points must be fixed. Points of far columns whose stage
    // has not run yet cannot be evaluated at this bound; they are outside
    // what the construction has committed to, so they are skipped rather
    // than guessed.
    try {
      if (perm::eval(*product, x) != x)
        throw std::logic_error("b * b^{p_n} moved a point outside its column");
    } catch (const perm::StageBudgetError&) {
    }
  }

  perm::CycleProfile profile;
  std::set<Point> in_window(column_points.begin(), column_points.end());
  std::set<Point> done;
  for (Point start : column_points) {
    if (done.count(start)) continue;
    std::vector<Point> walk{start};
    bool escaped = false;
    Point x = start;
    for (std::uint64_t step = 0; step <= 4 * w.bound; ++step) {
      x = perm::eval(*product, x);
      if (x == start) break;
      if (!in_window.count(x) || done.count(x)) {
        escaped = true;
        break;
      }
      walk.push_back(x);
    }
    for (Point p : walk) done.insert(p);
    if (escaped)
      profile.escapes += walk.size();
    else
      ++profile.counts[walk.size()];
  }
  return profile;
}

perm::ClassVerdict decode_at_horizon(std::uint64_t n, const Pi2Predicate& r,
                                     std::uint64_t stage_bound,
                                     std::uint64_t threshold) {
  if (auto stable = r.stabilized_count(n, stage_bound))
    return {perm::ClassVerdict::Kind::FinTwoCycles, *stable, 0};
  std::uint64_t count = two_cycle_count(n, r, stage_bound);
  if (count >= threshold)
    return {perm::ClassVerdict::Kind::InfEvidence, count, stage_bound};
  return {perm::ClassVerdict::Kind::Unknown, 0, 0};
}

}  // namespace symlift::pi2
