#include "symlift/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symlift::perm {

// ---------------------------------------------------------------------------
// FinPerm

FinPerm::FinPerm(const std::map<Point, Point>& moves) {
  std::set<Point> range;
  for (auto [from, to] : moves) {
    if (from == to) continue;  // fixed points stay implicit
    if (!range.insert(to).second)
      throw std::invalid_argument("finite permutation: move table not injective");
    moves_.emplace(from, to);
  }
  for (auto [from, to] : moves_) {
    (void)from;
    if (!moves_.count(to))
      throw std::invalid_argument("finite permutation: domain and range differ");
  }
}

FinPerm FinPerm::transposition(Point a, Point b) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct points");
  return FinPerm({{a, b}, {b, a}});
}

FinPerm FinPerm::from_cycle(const std::vector<Point>& cycle) {
  if (cycle.size() < 2)
    throw std::invalid_argument("cycle literal needs at least two points");
  std::map<Point, Point> m;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Point from = cycle[i];
    Point to = cycle[(i + 1) % cycle.size()];
    if (m.count(from))
      throw std::invalid_argument("cycle literal repeats a point");
    m.emplace(from, to);
  }
  return FinPerm(m);
}

FinPerm FinPerm::from_cycles(const std::vector<std::vector<Point>>& cycles) {
  FinPerm acc;
  for (const auto& c : cycles) acc = acc.then(from_cycle(c));
  return acc;
}

Point FinPerm::apply(Point x) const {
  auto it = moves_.find(x);
  return it == moves_.end() ? x : it->second;
}

Point FinPerm::apply_inverse(Point y) const {
  for (auto [from, to] : moves_)
    if (to == y) return from;
  return y;
}

FinPerm FinPerm::inverse() const {
  std::map<Point, Point> m;
  for (auto [from, to] : moves_) m.emplace(to, from);
  return FinPerm(m);
}

FinPerm FinPerm::then(const FinPerm& other) const {
  std::map<Point, Point> m;
  for (auto [from, to] : moves_) m[from] = other.apply(to);
  for (auto [from, to] : other.moves_)
    if (!moves_.count(from)) m[from] = to;
  return FinPerm(m);
}

FinPerm FinPerm::power(long long k) const {
  FinPerm base = k >= 0 ? *this : inverse();
  unsigned long long reps = k >= 0 ? static_cast<unsigned long long>(k)
                                   : static_cast<unsigned long long>(-(k + 1)) + 1;
  FinPerm acc;
  for (unsigned long long i = 0; i < reps; ++i) acc = acc.then(base);
  return acc;
}

bool FinPerm::is_involution() const {
  for (auto [from, to] : moves_)
    if (apply(to) != from) return false;
  return true;
}

std::vector<std::vector<Point>> FinPerm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::set<Point> seen;
  for (auto [start, unused] : moves_) {
    (void)unused;
    if (seen.count(start)) continue;
    std::vector<Point> cyc{start};
    seen.insert(start);
    for (Point x = apply(start); x != start; x = apply(x)) {
      cyc.push_back(x);
      seen.insert(x);
    }
    // Canonical rotation: start at the least point.
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::map<std::size_t, std::size_t> FinPerm::cycle_type() const {
  std::map<std::size_t, std::size_t> type;
  for (const auto& c : cycles()) ++type[c.size()];
  return type;
}

std::size_t FinPerm::two_cycle_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles())
    if (c.size() == 2) ++n;
  return n;
}

std::vector<Point> FinPerm::support() const {
  std::vector<Point> s;
  s.reserve(moves_.size());
  for (auto [from, to] : moves_) {
    (void)to;
    s.push_back(from);
  }
  return s;
}

Point FinPerm::max_support() const {
  return moves_.empty() ? 0 : moves_.rbegin()->first;
}

// ---------------------------------------------------------------------------
// Expression construction

std::string Atom::display() const {
  if (params.empty()) return name;
  std::string s = name + "[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + "]";
}

ExprPtr atom(AtomPtr a) {
  if (!a || !a->forward || !a->inverse)
    throw std::invalid_argument("atom without total evaluators");
  return std::make_shared<Expr>(Expr::Node{AtomNode{std::move(a)}});
}

ExprPtr fin(FinPerm f) {
  return std::make_shared<Expr>(Expr::Node{FinNode{std::move(f)}});
}

ExprPtr inv(ExprPtr e) {
  return std::make_shared<Expr>(Expr::Node{InvNode{std::move(e)}});
}

ExprPtr pow(ExprPtr e, long long k) {
  return std::make_shared<Expr>(Expr::Node{PowNode{std::move(e), k}});
}

ExprPtr prod(std::vector<ExprPtr> es) {
  if (es.size() == 1) return es.front();
  return std::make_shared<Expr>(Expr::Node{ProdNode{std::move(es)}});
}

ExprPtr conj(ExprPtr target, ExprPtr by) {
  return std::make_shared<Expr>(Expr::Node{ConjNode{std::move(target), std::move(by)}});
}

ExprPtr comm(ExprPtr a, ExprPtr b) {
  return std::make_shared<Expr>(Expr::Node{CommNode{std::move(a), std::move(b)}});
}

ExprPtr identity() { return prod({}); }

bool equal_trees(const Expr& a, const Expr& b) {
  const auto& na = a.node();
  const auto& nb = b.node();
  if (na.index() != nb.index()) return false;
  if (auto* x = std::get_if<AtomNode>(&na)) {
    auto* y = std::get_if<AtomNode>(&nb);
    return x->atom->name == y->atom->name && x->atom->params == y->atom->params;
  }
  if (auto* x = std::get_if<FinNode>(&na))
    return x->perm == std::get_if<FinNode>(&nb)->perm;
  if (auto* x = std::get_if<InvNode>(&na))
    return equal_trees(*x->inner, *std::get_if<InvNode>(&nb)->inner);
  if (auto* x = std::get_if<PowNode>(&na)) {
    auto* y = std::get_if<PowNode>(&nb);
    return x->exponent == y->exponent && equal_trees(*x->base, *y->base);
  }
  if (auto* x = std::get_if<ProdNode>(&na)) {
    auto* y = std::get_if<ProdNode>(&nb);
    if (x->factors.size() != y->factors.size()) return false;
    for (std::size_t i = 0; i < x->factors.size(); ++i)
      if (!equal_trees(*x->factors[i], *y->factors[i])) return false;
    return true;
  }
  if (auto* x = std::get_if<ConjNode>(&na)) {
    auto* y = std::get_if<ConjNode>(&nb);
    return equal_trees(*x->target, *y->target) && equal_trees(*x->by, *y->by);
  }
  auto* x = std::get_if<CommNode>(&na);
  auto* y = std::get_if<CommNode>(&nb);
  return equal_trees(*x->lhs, *y->lhs) && equal_trees(*x->rhs, *y->rhs);
}

// ---------------------------------------------------------------------------
// Evaluation

Point eval(const Expr& e, Point x) {
  const auto& n = e.node();
  if (auto* a = std::get_if<AtomNode>(&n)) return a->atom->forward(x);
  if (auto* f = std::get_if<FinNode>(&n)) return f->perm.apply(x);
  if (auto* i = std::get_if<InvNode>(&n)) return eval_inverse(*i->inner, x);
  if (auto* p = std::get_if<PowNode>(&n)) {
    long long k = p->exponent;
    Point y = x;
    if (k >= 0)
      for (long long r = 0; r < k; ++r) y = eval(*p->base, y);
    else
      for (long long r = 0; r < -k; ++r) y = eval_inverse(*p->base, y);
    return y;
  }
  if (auto* pr = std::get_if<ProdNode>(&n)) {
    Point y = x;
    for (const auto& f : pr->factors) y = eval(*f, y);
    return y;
  }
  if (auto* c = std::get_if<ConjNode>(&n)) {
    // target^by applied left to right: by', target, by
    Point y = eval_inverse(*c->by, x);
    y = eval(*c->target, y);
    return eval(*c->by, y);
  }
  auto* cm = std::get_if<CommNode>(&n);
  Point y = eval_inverse(*cm->lhs, x);
  y = eval_inverse(*cm->rhs, y);
  y = eval(*cm->lhs, y);
  return eval(*cm->rhs, y);
}

Point eval_inverse(const Expr& e, Point y) {
  const auto& n = e.node();
  if (auto* a = std::get_if<AtomNode>(&n)) return a->atom->inverse(y);
  if (auto* f = std::get_if<FinNode>(&n)) return f->perm.apply_inverse(y);
  if (auto* i = std::get_if<InvNode>(&n)) return eval(*i->inner, y);
  if (auto* p = std::get_if<PowNode>(&n)) {
    long long k = p->exponent;
    Point x = y;
    if (k >= 0)
      for (long long r = 0; r < k; ++r) x = eval_inverse(*p->base, x);
    else
      for (long long r = 0; r < -k; ++r) x = eval(*p->base, x);
    return x;
  }
  if (auto* pr = std::get_if<ProdNode>(&n)) {
    Point x = y;
    for (auto it = pr->factors.rbegin(); it != pr->factors.rend(); ++it)
      x = eval_inverse(**it, x);
    return x;
  }
  if (auto* c = std::get_if<ConjNode>(&n)) {
    Point x = eval_inverse(*c->by, y);
    x = eval_inverse(*c->target, x);
    return eval(*c->by, x);
  }
  // inverse of [a, b] = b' a' b a
  auto* cm = std::get_if<CommNode>(&n);
  Point x = eval_inverse(*cm->rhs, y);
  x = eval_inverse(*cm->lhs, x);
  x = eval(*cm->rhs, x);
  return eval(*cm->lhs, x);
}

std::map<Point, Point> window_image(const Expr& e, Window w) {
  std::map<Point, Point> img;
  for (Point x = 0; x < w.bound; ++x) img.emplace(x, eval(e, x));
  return img;
}

CycleProfile cycle_profile(const Expr& e, Window w, std::uint64_t step_budget) {
  if (step_budget < w.bound)
    throw std::invalid_argument("cycle_profile: step budget below window bound");
  CycleProfile profile;
  // 0 unseen, 1 in a counted cycle, 2 escaped
  std::vector<char> state(w.bound, 0);
  for (Point start = 0; start < w.bound; ++start) {
    if (state[start]) continue;
    std::vector<Point> walk{start};
    bool escaped = false;
    Point x = start;
    for (std::uint64_t step = 0;; ++step) {
      if (step >= step_budget) { escaped = true; break; }
      x = eval(e, x);
      if (x == start) break;               // cycle closed inside the window
      if (x >= w.bound || state[x]) { escaped = true; break; }
      walk.push_back(x);
    }
    if (escaped) {
      for (Point p : walk) state[p] = 2;
      profile.escapes += walk.size();
    } else {
      for (Point p : walk) state[p] = 1;
      ++profile.counts[walk.size()];
    }
  }
  return profile;
}

CycleProfile cycle_profile(const Expr& e, Window w) {
  return cycle_profile(e, w, 4 * w.bound);
}

bool equal_on(const Expr& a, const Expr& b, Window w) {
  for (Point x = 0; x < w.bound; ++x)
    if (eval(a, x) != eval(b, x)) return false;
  return true;
}

bool is_identity_on(const Expr& e, Window w) {
  for (Point x = 0; x < w.bound; ++x)
    if (eval(e, x) != x) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Conjugator search for finitary permutations

FinPerm conjugator_finitary(const FinPerm& p, const FinPerm& q) {
  if (p.cycle_type() != q.cycle_type())
    throw std::invalid_argument("conjugator_finitary: cycle-type mismatch");
  auto pc = p.cycles();
  auto qc = q.cycles();
  // Group both sides by length; cycles are already in canonical order, so
  // pairing same-length cycles positionally is deterministic.
  auto by_length = [](std::vector<std::vector<Point>>& cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
      return a.size() < b.size();
    });
  };
  by_length(pc);
  by_length(qc);
  std::map<Point, Point> h;
  for (std::size_t i = 0; i < pc.size(); ++i)
    for (std::size_t j = 0; j < pc[i].size(); ++j) h[pc[i][j]] = qc[i][j];
  // h so far maps supp(p) onto supp(q); close it into a permutation of the
  // union by matching the leftover points in increasing order.
  std::set<Point> dom, rng;
  for (auto [a, b] : h) { dom.insert(a); rng.insert(b); }
  std::vector<Point> missing_dom, missing_rng;
  for (Point b : rng)
    if (!dom.count(b)) missing_dom.push_back(b);
  for (Point a : dom)
    if (!rng.count(a)) missing_rng.push_back(a);
  for (std::size_t i = 0; i < missing_dom.size(); ++i)
    h[missing_dom[i]] = missing_rng[i];
  return FinPerm(h);
}

// ---------------------------------------------------------------------------
// Finitary analysis and classification

namespace {

FinPerm conj_image(const FinPerm& f, const Expr& by) {
  // Conj(f, by) moves by(a) to by(b) for every move a -> b of f.
  std::map<Point, Point> m;
  for (auto [a, b] : f.moves()) m[eval(by, a)] = eval(by, b);
  return FinPerm(m);
}

}  // namespace

std::optional<FinPerm> finitary_closure(const Expr& e) {
  const auto& n = e.node();
  if (auto* a = std::get_if<AtomNode>(&n)) return a->atom->finitary;
  if (auto* f = std::get_if<FinNode>(&n)) return f->perm;
  if (auto* i = std::get_if<InvNode>(&n)) {
    auto inner = finitary_closure(*i->inner);
    if (!inner) return std::nullopt;
    return inner->inverse();
  }
  if (auto* p = std::get_if<PowNode>(&n)) {
    if (p->exponent == 0) return FinPerm{};
    auto base = finitary_closure(*p->base);
    if (!base) return std::nullopt;
    return base->power(p->exponent);
  }
  if (auto* pr = std::get_if<ProdNode>(&n)) {
    FinPerm acc;
    for (const auto& f : pr->factors) {
      auto part = finitary_closure(*f);
      if (!part) return std::nullopt;
      acc = acc.then(*part);
    }
    return acc;
  }
  if (auto* c = std::get_if<ConjNode>(&n)) {
    auto target = finitary_closure(*c->target);
    if (!target) return std::nullopt;
    return conj_image(*target, *c->by);
  }
  auto* cm = std::get_if<CommNode>(&n);
  // [x, y] = x' * x^y when x is finitary, and (y')^x * y when y is.
  if (auto fx = finitary_closure(*cm->lhs))
    return fx->inverse().then(conj_image(*fx, *cm->rhs));
  if (auto fy = finitary_closure(*cm->rhs))
    return conj_image(fy->inverse(), *cm->lhs).then(*fy);
  return std::nullopt;
}

ClassVerdict classify(const Expr& e, Window w, std::uint64_t evidence_threshold) {
  if (auto f = finitary_closure(e)) {
    return {ClassVerdict::Kind::FinTwoCycles,
            static_cast<std::uint64_t>(f->two_cycle_count()), 0};
  }
  auto profile = cycle_profile(e, w);
  std::uint64_t twos = profile.count_of(2);
  if (twos >= evidence_threshold)
    return {ClassVerdict::Kind::InfEvidence, twos, w.bound};
  return {ClassVerdict::Kind::Unknown, 0, 0};
}

// ---------------------------------------------------------------------------
// Registry

void AtomRegistry::add(AtomPtr a) {
  if (!a) throw std::invalid_argument("registry: null atom");
  atoms_[a->name] = std::move(a);
}

void AtomRegistry::add_family(const std::string& name,
                              std::function<AtomPtr(long long)> make) {
  families_[name] = std::move(make);
}

bool AtomRegistry::has(const std::string& name) const {
  return atoms_.count(name) > 0;
}

bool AtomRegistry::has_family(const std::string& name) const {
  return families_.count(name) > 0;
}

AtomPtr AtomRegistry::get(const std::string& name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end())
    throw std::invalid_argument("unknown atom: " + name);
  return it->second;
}

AtomPtr AtomRegistry::get(const std::string& name, long long param) const {
  auto it = families_.find(name);
  if (it == families_.end())
    throw std::invalid_argument("unknown atom family: " + name);
  return it->second(param);
}

std::vector<std::string> AtomRegistry::plain_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : atoms_) {
    (void)v;
    out.push_back(k);
  }
  return out;
}

std::vector<std::string> AtomRegistry::family_names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : families_) {
    (void)v;
    out.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Context-free atoms

AtomPtr atom_identity() {
  auto a = std::make_shared<Atom>();
  a->name = "id";
  a->forward = [](Point x) { return x; };
  a->inverse = [](Point x) { return x; };
  a->involution = true;
  a->finitary = FinPerm{};
  return a;
}

AtomPtr atom_tau() {
  auto a = std::make_shared<Atom>();
  a->name = "tau";
  auto f = [](Point x) -> Point { return x == 0 ? 1 : x == 1 ? 0 : x; };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->finitary = FinPerm::transposition(0, 1);
  return a;
}

AtomPtr atom_z() {
  auto a = std::make_shared<Atom>();
  a->name = "z";
  // Fixes 0; otherwise a single two-way infinite chain
  // ... -> 6 -> 4 -> 2 -> 1 -> 3 -> 5 -> ...
  a->forward = [](Point k) -> Point {
    if (k == 0) return 0;
    if (k == 2) return 1;
    if (k % 2 == 0) return k - 2;  // k >= 4
    return k + 2;                  // odd
  };
  a->inverse = [](Point k) -> Point {
    if (k == 0) return 0;
    if (k == 1) return 2;
    if (k % 2 == 0) return k + 2;
    return k - 2;                  // odd k >= 3
  };
  return a;
}

AtomPtr atom_swapadj() {
  auto a = std::make_shared<Atom>();
  a->name = "swapadj";
  auto f = [](Point x) -> Point { return x % 2 == 0 ? x + 1 : x - 1; };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->swap_family = [](std::uint64_t k) { return SwapPair{2 * k, 2 * k + 1}; };
  return a;
}

AtomPtr atom_blk() {
  auto a = std::make_shared<Atom>();
  a->name = "blk";
  auto f = [](Point x) -> Point {
    switch (x % 4) {
      case 0: return x + 1;
      case 1: return x - 1;
      default: return x;
    }
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->swap_family = [](std::uint64_t k) { return SwapPair{4 * k, 4 * k + 1}; };
  a->fixed_family = [](std::uint64_t k) -> Point {
    return 4 * (k / 2) + 2 + (k % 2);
  };
  return a;
}

AtomRegistry base_registry() {
  AtomRegistry r;
  r.add(atom_identity());
  r.add(atom_tau());
  r.add(atom_z());
  r.add(atom_swapadj());
  r.add(atom_blk());
  return r;
}

}  // namespace symlift::perm
