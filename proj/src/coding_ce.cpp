#include "symlift/coding_ce.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "symlift/pairing.hpp"

namespace symlift::ce {

using perm::Point;

perm::Point ColumnSchemeZ::encode(long long column, std::uint64_t index) const {
  return cantor_pair(fold_int(column), index);
}

std::pair<long long, std::uint64_t> ColumnSchemeZ::decode(perm::Point p) const {
  auto [a, b] = cantor_unpair(p);
  return {unfold_int(a), b};
}

ColumnSchemeZ default_scheme_z() { return ColumnSchemeZ{}; }

// ---------------------------------------------------------------------------
// Enumerator

void Enumerator::check_injective() const {
  std::set<std::uint64_t> seen;
  for (const auto& v : values_)
    if (v && !seen.insert(*v).second)
      throw std::invalid_argument(
          "enumerator is not injective: value " + std::to_string(*v) +
          " enumerated twice");
}

Enumerator Enumerator::evens(std::uint64_t horizon) {
  Enumerator e;
  e.name_ = "evens";
  e.horizon_ = horizon;
  e.values_.resize(horizon);
  for (std::uint64_t t = 0; t < horizon; ++t) e.values_[t] = 2 * t;
  return e;
}

Enumerator Enumerator::empty(std::uint64_t horizon) {
  Enumerator e;
  e.name_ = "empty";
  e.horizon_ = horizon;
  e.values_.resize(horizon);
  return e;
}

namespace {
const std::vector<std::uint64_t>& first_25_primes() {
  static const std::vector<std::uint64_t> primes = {
      2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
      43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  return primes;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

Enumerator Enumerator::primes25() {
  Enumerator e;
  e.name_ = "primes25";
  e.horizon_ = first_25_primes().size();
  for (auto p : first_25_primes()) e.values_.emplace_back(p);
  return e;
}

Enumerator Enumerator::from_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& stage_value,
    std::uint64_t horizon, std::string name) {
  Enumerator e;
  e.name_ = std::move(name);
  e.horizon_ = horizon;
  for (auto [t, n] : stage_value)
    if (t >= horizon) e.horizon_ = t + 1;
  e.values_.resize(e.horizon_);
  for (auto [t, n] : stage_value) {
    if (e.values_[t])
      throw std::invalid_argument("enumerator: stage " + std::to_string(t) +
                                  " listed twice");
    e.values_[t] = n;
  }
  e.check_injective();
  return e;
}

Enumerator Enumerator::from_file(const std::string& path,
                                 std::optional<std::uint64_t> horizon) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open enumerator file: " + path);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::uint64_t t, n;
    if (ls >> t >> n) pairs.emplace_back(t, n);
  }
  return from_pairs(pairs, horizon.value_or(0), path);
}

Enumerator Enumerator::named(const std::string& name, std::uint64_t horizon) {
  if (name == "evens") return evens(horizon);
  if (name == "empty") return empty(horizon);
  if (name == "primes25") {
    auto e = primes25();
    if (horizon > e.horizon_) {  // later stages enumerate nothing
      e.horizon_ = horizon;
      e.values_.resize(horizon);
    }
    return e;
  }
  throw std::invalid_argument("unknown enumerator name: " + name);
}

std::optional<std::uint64_t> Enumerator::value_at(std::uint64_t stage) const {
  if (stage >= horizon_) return std::nullopt;
  return values_[stage];
}

std::optional<std::uint64_t> Enumerator::stage_of(std::uint64_t value) const {
  for (std::uint64_t t = 0; t < horizon_; ++t)
    if (values_[t] && *values_[t] == value) return t;
  return std::nullopt;
}

std::size_t Enumerator::enumerated_count() const {
  std::size_t n = 0;
  for (const auto& v : values_)
    if (v) ++n;
  return n;
}

std::optional<bool> Enumerator::ground_truth(std::uint64_t n) const {
  if (name_ == "evens") return n % 2 == 0 && n / 2 < horizon_;
  if (name_ == "empty") return false;
  if (name_ == "primes25") return is_small_prime(n) && n <= first_25_primes().back();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generators

perm::ExprPtr gen_w(const ColumnSchemeZ& s) {
  auto a = std::make_shared<perm::Atom>();
  a->name = "w";
  a->forward = [s](Point x) {
    auto [i, j] = s.decode(x);
    return s.encode(i + 1, j);
  };
  a->inverse = [s](Point x) {
    auto [i, j] = s.decode(x);
    return s.encode(i - 1, j);
  };
  return perm::atom(a);
}

perm::ExprPtr gen_g0(const ColumnSchemeZ& s) {
  auto a = std::make_shared<perm::Atom>();
  a->name = "g0";
  auto f = [s](Point x) {
    auto [i, j] = s.decode(x);
    if (i != 0) return x;
    return s.encode(0, j % 2 == 0 ? j + 1 : j - 1);
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->swap_family = [s](std::uint64_t k) {
    return perm::SwapPair{s.encode(0, 2 * k), s.encode(0, 2 * k + 1)};
  };
  return perm::atom(a);
}

perm::ExprPtr gen_g1(const ColumnSchemeZ& s) {
  auto a = std::make_shared<perm::Atom>();
  a->name = "g1";
  auto f = [s](Point x) {
    auto [i, j] = s.decode(x);
    if (i != 0 || j == 0) return x;
    return s.encode(0, j % 2 == 1 ? j + 1 : j - 1);
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  return perm::atom(a);
}

perm::ExprPtr gen_b(const ColumnSchemeZ& s, const Enumerator& e) {
  // Capture the pairing by value so the atom stays valid on its own.
  struct Table {
    std::map<std::uint64_t, std::uint64_t> stage_by_value;  // n -> t
  };
  auto table = std::make_shared<Table>();
  perm::FinPerm full;
  {
    std::map<Point, Point> moves;
    for (std::uint64_t t = 0; t < e.horizon(); ++t) {
      auto n = e.value_at(t);
      if (!n) continue;
      if (!table->stage_by_value.emplace(*n, t).second)
        throw std::invalid_argument("enumerator is not injective");
      Point lo = s.encode(static_cast<long long>(*n), t);
      Point hi = s.encode(static_cast<long long>(*n), t + 1);
      moves[lo] = hi;
      moves[hi] = lo;
    }
    full = perm::FinPerm(moves);
  }
  auto a = std::make_shared<perm::Atom>();
  a->name = "b";
  auto f = [s, table](Point x) {
    auto [i, j] = s.decode(x);
    if (i < 0) return x;
    auto it = table->stage_by_value.find(static_cast<std::uint64_t>(i));
    if (it == table->stage_by_value.end()) return x;
    std::uint64_t t = it->second;
    if (j == t) return s.encode(i, t + 1);
    if (j == t + 1) return s.encode(i, t);
    return x;
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->finitary = std::move(full);  // finite horizon makes b finitely supported
  return perm::atom(a);
}

void register_atoms(perm::AtomRegistry& reg, const ColumnSchemeZ& s,
                    const Enumerator& e) {
  auto atom_of = [](const perm::ExprPtr& expr) {
    return std::get<perm::AtomNode>(expr->node()).atom;
  };
  reg.add(atom_of(gen_w(s)));
  reg.add(atom_of(gen_g0(s)));
  reg.add(atom_of(gen_g1(s)));
  reg.add(atom_of(gen_b(s, e)));
}

// ---------------------------------------------------------------------------
// Decoding

std::uint64_t window_covering_column0(const ColumnSchemeZ& s, std::uint64_t max_index) {
  return s.encode(0, max_index) + 1;
}

CommutatorProbe probe_commutators(std::uint64_t n, const ColumnSchemeZ& s,
                                  const Enumerator& e, perm::Window w) {
  if (w.bound < window_covering_column0(s, e.horizon() + 2))
    throw std::invalid_argument(
        "window too small: decode needs column-0 indices up to horizon + 2");
  auto b = gen_b(s, e);
  auto wgen = gen_w(s);
  auto transported = perm::conj(b, perm::pow(wgen, -static_cast<long long>(n)));
  auto c0 = perm::comm(gen_g0(s), transported);
  auto c1 = perm::comm(gen_g1(s), transported);
  CommutatorProbe probe;
  for (std::uint64_t j = 0; j <= e.horizon() + 1; ++j) {
    Point x = s.encode(0, j);
    if (perm::eval(*c0, x) != x) probe.g0_noncommuting = true;
    if (perm::eval(*c1, x) != x) probe.g1_noncommuting = true;
    if (probe.g0_noncommuting && probe.g1_noncommuting) break;
  }
  return probe;
}

DecodeVerdict decode_membership(std::uint64_t n, const ColumnSchemeZ& s,
                                const Enumerator& e, perm::Window w) {
  auto probe = probe_commutators(n, s, e, w);
  if (probe.any()) {
    auto t = e.stage_of(n);
    if (!t)
      throw std::logic_error(
          "decode: commutator fired but the enumerator never lists " +
          std::to_string(n));
    return {DecodeVerdict::Kind::In, *t};
  }
  return {DecodeVerdict::Kind::NotByHorizon, e.horizon()};
}

}  // namespace symlift::ce
