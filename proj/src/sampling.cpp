#include "symlift/sampling.hpp"

#include <algorithm>
#include <set>

namespace symlift::sampling {

std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

perm::FinPerm random_finperm(Rng& rng, std::uint64_t carrier,
                             std::uint64_t max_support) {
  std::uint64_t size = pick(rng, 2, std::max<std::uint64_t>(2, max_support));
  std::set<perm::Point> chosen;
  while (chosen.size() < size) chosen.insert(pick(rng, 0, carrier - 1));
  std::vector<perm::Point> points(chosen.begin(), chosen.end());
  std::vector<perm::Point> images = points;
  std::shuffle(images.begin(), images.end(), rng);
  std::map<perm::Point, perm::Point> moves;
  for (std::size_t i = 0; i < points.size(); ++i) moves[points[i]] = images[i];
  return perm::FinPerm(moves);  // fixed points drop out
}

perm::FinPerm random_involution(Rng& rng, std::uint64_t carrier,
                                std::uint64_t min_pairs, std::uint64_t max_pairs) {
  std::uint64_t pairs = pick(rng, min_pairs, max_pairs);
  std::set<perm::Point> chosen;
  while (chosen.size() < 2 * pairs) chosen.insert(pick(rng, 0, carrier - 1));
  std::vector<perm::Point> points(chosen.begin(), chosen.end());
  std::shuffle(points.begin(), points.end(), rng);
  std::map<perm::Point, perm::Point> moves;
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    moves[points[i]] = points[i + 1];
    moves[points[i + 1]] = points[i];
  }
  return perm::FinPerm(moves);
}

namespace {

perm::ExprPtr random_cycle(Rng& rng, std::uint64_t carrier) {
  std::uint64_t len = pick(rng, 2, 4);
  std::set<perm::Point> chosen;
  while (chosen.size() < len) chosen.insert(pick(rng, 0, carrier - 1));
  std::vector<perm::Point> cyc(chosen.begin(), chosen.end());
  std::shuffle(cyc.begin(), cyc.end(), rng);
  return perm::fin(perm::FinPerm::from_cycle(cyc));
}

perm::ExprPtr random_expr_impl(Rng& rng, int depth,
                               const std::function<perm::ExprPtr()>& leaf) {
  if (depth <= 0 || pick(rng, 0, 3) == 0) return leaf();
  switch (pick(rng, 0, 4)) {
    case 0:
      return perm::inv(random_expr_impl(rng, depth - 1, leaf));
    case 1:
      return perm::pow(random_expr_impl(rng, depth - 1, leaf),
                       static_cast<long long>(pick(rng, 0, 6)) - 3);
    case 2: {
      std::vector<perm::ExprPtr> fs;
      std::uint64_t n = pick(rng, 2, 3);
      for (std::uint64_t i = 0; i < n; ++i)
        fs.push_back(random_expr_impl(rng, depth - 1, leaf));
      return perm::prod(std::move(fs));
    }
    case 3:
      return perm::conj(random_expr_impl(rng, depth - 1, leaf),
                        random_expr_impl(rng, depth - 1, leaf));
    default:
      return perm::comm(random_expr_impl(rng, depth - 1, leaf),
                        random_expr_impl(rng, depth - 1, leaf));
  }
}

}  // namespace

perm::ExprPtr random_expr(Rng& rng, const perm::AtomRegistry& atoms, int depth) {
  auto plain = atoms.plain_names();
  auto families = atoms.family_names();
  auto leaf = [&rng, &atoms, plain, families]() -> perm::ExprPtr {
    std::uint64_t kinds = plain.size() + families.size() + 1;
    std::uint64_t k = pick(rng, 0, kinds - 1);
    if (k < plain.size()) return perm::atom(atoms.get(plain[k]));
    if (k < plain.size() + families.size())
      return perm::atom(atoms.get(families[k - plain.size()],
                                  static_cast<long long>(pick(rng, 0, 7))));
    return random_cycle(rng, 12);
  };
  return random_expr_impl(rng, depth, leaf);
}

perm::ExprPtr random_window_expr(Rng& rng, std::uint64_t window, int depth) {
  auto leaf = [&rng, window]() { return random_cycle(rng, window); };
  return random_expr_impl(rng, depth, leaf);
}

intalg::BElem random_belem(Rng& rng) {
  std::vector<intalg::Interval> parts;
  std::uint64_t n = pick(rng, 0, 3);
  for (std::uint64_t i = 0; i < n; ++i) {
    long long num1 = static_cast<long long>(pick(rng, 0, 32)) - 8;
    long long den1 = static_cast<long long>(pick(rng, 1, 4));
    Rational lo(num1, den1);
    Rational hi = lo + Rational(static_cast<long long>(pick(rng, 1, 12)),
                                static_cast<long long>(pick(rng, 1, 4)));
    auto elo = pick(rng, 0, 9) == 0 ? intalg::Endpoint::neg_inf()
                                    : intalg::Endpoint::at(lo);
    auto ehi = pick(rng, 0, 9) == 0 ? intalg::Endpoint::pos_inf()
                                    : intalg::Endpoint::at(hi);
    parts.push_back({elo, ehi});
  }
  return intalg::BElem::from_intervals(std::move(parts));
}

vspace::Vector random_vector(Rng& rng, const vspace::Field& f,
                             std::size_t max_index) {
  vspace::Vector v(f);
  std::uint64_t entries = pick(rng, 1, 4);
  for (std::uint64_t i = 0; i < entries; ++i) {
    std::size_t idx = pick(rng, 0, max_index);
    std::uint64_t bound = f.order() == 0 ? 20 : static_cast<std::uint64_t>(f.order()) - 1;
    v.set_coord(idx, f.element(pick(rng, 0, bound)));
  }
  return v;
}

vspace::Subspace random_subspace(Rng& rng, const vspace::Field& f,
                                 std::size_t max_dim, std::size_t max_index) {
  std::vector<vspace::Vector> gens;
  std::uint64_t n = pick(rng, 1, max_dim);
  for (std::uint64_t i = 0; i < n; ++i) gens.push_back(random_vector(rng, f, max_index));
  return vspace::Subspace::span(f, gens);
}

}  // namespace symlift::sampling
