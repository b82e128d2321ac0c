#include "symlift/vspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symlift::vspace {

// ---------------------------------------------------------------------------
// Field

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long code_of(const Scalar& a) { return a.num(); }

// GF(4) as {0, 1, x, x+1} coded 0..3; addition is xor, multiplication by
// the reduced polynomial x^2 = x + 1.
long long gf4_mul(long long a, long long b) {
  static const long long table[4][4] = {
      {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  return table[a][b];
}

}  // namespace

Field Field::rationals() { return Field(Kind::Rationals, 0); }

Field Field::prime(int p) {
  if (!is_prime(p) || p > 97)
    throw std::invalid_argument("prime field wants a prime p <= 97");
  return Field(Kind::Prime, p);
}

Field Field::gf4() {
  Field f(Kind::Gf4, 4);
  // The Frobenius square must be a field automorphism; the field is four
  // elements, so check it outright.
  for (long long a = 0; a < 4; ++a)
    for (long long b = 0; b < 4; ++b) {
      long long sa = gf4_mul(a, a), sb = gf4_mul(b, b);
      if ((sa ^ sb) != gf4_mul(a ^ b, a ^ b) ||
          gf4_mul(sa, sb) != gf4_mul(gf4_mul(a, b), gf4_mul(a, b)))
        throw std::logic_error("gf4 Frobenius failed its automorphism check");
    }
  return f;
}

Field Field::parse(const std::string& name) {
  if (name == "q" || name == "Q" || name == "rationals") return rationals();
  if (name == "gf4") return gf4();
  if (name.rfind("gf", 0) == 0) return prime(std::stoi(name.substr(2)));
  throw std::invalid_argument("unknown field: " + name);
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::Rationals: return "q";
    case Kind::Gf4: return "gf4";
    case Kind::Prime: return "gf" + std::to_string(p_);
  }
  return "?";
}

int Field::order() const { return kind_ == Kind::Rationals ? 0 : p_; }

void Field::validate(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return;
  if (!a.is_integer() || a.num() < 0 || a.num() >= p_)
    throw std::invalid_argument("scalar " + a.str() + " is not a " + name() +
                                " element code");
}

Scalar Field::from_int(long long v) const {
  if (kind_ == Kind::Rationals) return Scalar(v);
  long long m = v % p_;
  if (m < 0) m += p_;
  return Scalar(m);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  validate(a); validate(b);
  switch (kind_) {
    case Kind::Rationals: return a + b;
    case Kind::Prime: return Scalar((code_of(a) + code_of(b)) % p_);
    case Kind::Gf4: return Scalar(code_of(a) ^ code_of(b));
  }
  return a;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  validate(a); validate(b);
  switch (kind_) {
    case Kind::Rationals: return a * b;
    case Kind::Prime: return Scalar((code_of(a) * code_of(b)) % p_);
    case Kind::Gf4: return Scalar(gf4_mul(code_of(a), code_of(b)));
  }
  return a;
}

Scalar Field::neg(const Scalar& a) const {
  validate(a);
  switch (kind_) {
    case Kind::Rationals: return -a;
    case Kind::Prime: return Scalar((p_ - code_of(a)) % p_);
    case Kind::Gf4: return a;  // characteristic 2
  }
  return a;
}

Scalar Field::inv(const Scalar& a) const {
  validate(a);
  if (a.is_zero()) throw std::domain_error("field inverse of zero");
  switch (kind_) {
    case Kind::Rationals: return Scalar(1) / a;
    case Kind::Prime: {
      long long c = code_of(a);
      for (long long x = 1; x < p_; ++x)
        if ((c * x) % p_ == 1) return Scalar(x);
      throw std::logic_error("prime field element without inverse");
    }
    case Kind::Gf4:
      for (long long x = 1; x < 4; ++x)
        if (gf4_mul(code_of(a), x) == 1) return Scalar(x);
      throw std::logic_error("gf4 element without inverse");
  }
  return a;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::aut_available(FieldAut s) const {
  return s == FieldAut::Identity || kind_ == Kind::Gf4;
}

Scalar Field::apply_aut(FieldAut s, const Scalar& a) const {
  if (s == FieldAut::Identity) return a;
  if (kind_ != Kind::Gf4)
    throw std::invalid_argument("Frobenius twist only lives on gf4");
  return mul(a, a);
}

Scalar Field::element(std::uint64_t index) const {
  if (kind_ != Kind::Rationals) return Scalar(static_cast<long long>(index % p_));
  if (index == 0) return Scalar(0);
  // Height enumeration: for h = 1, 2, ... list n/d with max(n, d) = h and
  // gcd(n, d) = 1, positive before negative, denominator 1 first.
  std::uint64_t seen = 0;
  for (long long h = 1;; ++h) {
    for (long long d = 1; d <= h; ++d) {
      long long n = d < h ? h : 0;
      if (d == h) {
        for (long long nn = 1; nn <= (h == 1 ? 1 : h - 1); ++nn) {
          if (std::gcd(nn, h) != 1) continue;
          if (++seen == index) return Scalar(nn, h);
          if (++seen == index) return Scalar(-nn, h);
        }
        continue;
      }
      if (std::gcd(n, d) != 1) continue;
      if (++seen == index) return Scalar(n, d);
      if (++seen == index) return Scalar(-n, d);
    }
  }
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return a.str();
  return std::to_string(a.num());
}

// ---------------------------------------------------------------------------
// Vector

Vector Vector::basis(const Field& f, std::size_t i) {
  Vector v(f);
  v.coords_.emplace(i, f.one());
  return v;
}

Scalar Vector::coord(std::size_t i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? field_.zero() : it->second;
}

void Vector::set_coord(std::size_t i, const Scalar& v) {
  if (field_.is_zero(v))
    coords_.erase(i);
  else
    coords_[i] = v;
}

std::size_t Vector::max_index() const {
  return coords_.empty() ? 0 : coords_.rbegin()->first;
}

std::optional<std::size_t> Vector::leading_index() const {
  if (coords_.empty()) return std::nullopt;
  return coords_.begin()->first;
}

Vector Vector::add(const Vector& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
  Vector out = *this;
  for (const auto& [i, a] : o.coords_) out.set_coord(i, field_.add(out.coord(i), a));
  return out;
}

Vector Vector::sub(const Vector& o) const { return add(o.negate()); }

Vector Vector::scale(const Scalar& a) const {
  Vector out(field_);
  if (field_.is_zero(a)) return out;
  for (const auto& [i, c] : coords_) out.set_coord(i, field_.mul(a, c));
  return out;
}

Vector Vector::negate() const {
  Vector out(field_);
  for (const auto& [i, c] : coords_) out.set_coord(i, field_.neg(c));
  return out;
}

std::string Vector::serialize() const {
  std::string s = field_.name() + "|";
  bool first = true;
  for (const auto& [i, c] : coords_) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i) + ":" + c.str();
  }
  return s;
}

Vector Vector::deserialize(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw std::invalid_argument("vector literal needs a field tag");
  Vector v(Field::parse(text.substr(0, bar)));
  std::istringstream in(text.substr(bar + 1));
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("vector entry needs index:value");
    v.set_coord(std::stoull(part.substr(0, colon)),
                Rational::parse(part.substr(colon + 1)));
  }
  return v;
}

// ---------------------------------------------------------------------------
// SemilinearMap

namespace {

FieldAut compose_aut(FieldAut first, FieldAut second) {
  return first == second ? FieldAut::Identity : FieldAut::Frobenius;
}

}  // namespace

SemilinearMap SemilinearMap::identity(const Field& f) {
  return perm_induced(f, perm::identity());
}

SemilinearMap SemilinearMap::perm_induced(const Field& f, perm::ExprPtr p,
                                          FieldAut sigma) {
  if (!f.aut_available(sigma))
    throw std::invalid_argument("field has no such automorphism");
  return SemilinearMap(f, sigma, PermRule{std::move(p)}, f.one());
}

SemilinearMap SemilinearMap::finite_modification(const Field& f,
                                                 std::map<std::size_t, Vector> images,
                                                 FieldAut sigma) {
  if (!f.aut_available(sigma))
    throw std::invalid_argument("field has no such automorphism");
  for (auto it = images.begin(); it != images.end();) {
    if (!(it->second.field() == f))
      throw std::invalid_argument("image vector over the wrong field");
    if (it->second == Vector::basis(f, it->first))
      it = images.erase(it);  // identity entries stay implicit
    else
      ++it;
  }
  return SemilinearMap(f, sigma, TableRule{std::move(images)}, f.one());
}

SemilinearMap SemilinearMap::scaled(const Scalar& alpha, SemilinearMap m) {
  if (m.field_.is_zero(alpha))
    throw std::invalid_argument("scaling a semilinear map by zero");
  m.scale_ = m.field_.mul(alpha, m.scale_);
  return m;
}

Vector SemilinearMap::apply_basis(std::size_t i) const {
  Vector out(field_);
  if (auto* pr = std::get_if<PermRule>(&rule_)) {
    out.set_coord(perm::eval(*pr->p, i), scale_);
    return out;
  }
  const auto& table = std::get<TableRule>(rule_).images;
  auto it = table.find(i);
  if (it == table.end()) {
    out.set_coord(i, scale_);
    return out;
  }
  return it->second.scale(scale_);
}

Vector SemilinearMap::apply(const Vector& v) const {
  if (!(v.field() == field_)) throw std::invalid_argument("field mismatch");
  Vector out(field_);
  for (const auto& [i, a] : v.coords())
    out = out.add(apply_basis(i).scale(field_.apply_aut(sigma_, a)));
  return out;
}

std::optional<perm::FinPerm> SemilinearMap::finitary_perm() const {
  if (auto* pr = std::get_if<PermRule>(&rule_)) return perm::finitary_closure(*pr->p);
  return std::nullopt;
}

perm::ExprPtr SemilinearMap::induced_expr() const {
  if (auto* pr = std::get_if<PermRule>(&rule_)) return pr->p;
  return nullptr;
}

SemilinearMap SemilinearMap::then(const SemilinearMap& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("field mismatch");
  FieldAut sigma = compose_aut(sigma_, other.sigma_);
  // other(this(v)) = other.sigma(this.scale) * other.scale * cores
  Scalar scale = field_.mul(field_.apply_aut(other.sigma_, scale_), other.scale_);

  auto* p1 = std::get_if<PermRule>(&rule_);
  auto* p2 = std::get_if<PermRule>(&other.rule_);
  if (p1 && p2) {
    SemilinearMap out(field_, sigma, PermRule{perm::prod({p1->p, p2->p})},
                      scale);
    return out;
  }

  // Mixed or table shapes compose through finite tables when both sides
  // are identity off a finite set.
  auto to_table = [&](const Rule& r) -> std::optional<std::map<std::size_t, Vector>> {
    if (auto* t = std::get_if<TableRule>(&r)) return t->images;
    auto fp = perm::finitary_closure(*std::get<PermRule>(r).p);
    if (!fp) return std::nullopt;
    std::map<std::size_t, Vector> images;
    for (auto [from, to] : fp->moves())
      images.emplace(from, Vector::basis(field_, to));
    return images;
  };
  auto t1 = to_table(rule_);
  auto t2 = to_table(other.rule_);
  if (!t1 || !t2)
    throw std::invalid_argument(
        "compose: no closed form for an infinite permutation rule mixed "
        "with a finite modification");
  auto image2 = [&](std::size_t i) {
    auto it = t2->find(i);
    return it == t2->end() ? Vector::basis(field_, i) : it->second;
  };
  std::set<std::size_t> keys;
  for (const auto& [i, v] : *t1) { (void)v; keys.insert(i); }
  for (const auto& [i, v] : *t2) { (void)v; keys.insert(i); }
  std::map<std::size_t, Vector> images;
  for (std::size_t i : keys) {
    auto it = t1->find(i);
    Vector mid = it == t1->end() ? Vector::basis(field_, i) : it->second;
    Vector out(field_);
    for (const auto& [j, a] : mid.coords())
      out = out.add(image2(j).scale(field_.apply_aut(other.sigma_, a)));
    images.emplace(i, std::move(out));
  }
  auto composed = finite_modification(field_, std::move(images), sigma);
  composed.scale_ = scale;
  return composed;
}

SemilinearMap SemilinearMap::inverse() const {
  // (alpha * core)^-1 = sigma^-1(alpha^-1) * core^-1; every automorphism
  // here is an involution, so sigma^-1 = sigma.
  Scalar inv_scale = field_.apply_aut(sigma_, field_.inv(scale_));
  if (auto* pr = std::get_if<PermRule>(&rule_)) {
    SemilinearMap out(field_, sigma_, PermRule{perm::inv(pr->p)}, inv_scale);
    return out;
  }
  const auto& table = std::get<TableRule>(rule_).images;
  // Solve the finite block: collect the touched indices, build the matrix
  // of core images, invert by elimination.
  std::set<std::size_t> touched;
  for (const auto& [i, v] : table) {
    touched.insert(i);
    for (const auto& [j, a] : v.coords()) { (void)a; touched.insert(j); }
  }
  std::vector<std::size_t> idx(touched.begin(), touched.end());
  std::size_t n = idx.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < n; ++k) pos[idx[k]] = k;
  // columns of M are core images of the touched basis vectors
  std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n, field_.zero()));
  std::vector<std::vector<Scalar>> I(n, std::vector<Scalar>(n, field_.zero()));
  for (std::size_t c = 0; c < n; ++c) {
    I[c][c] = field_.one();
    auto it = table.find(idx[c]);
    if (it == table.end()) {
      M[pos[idx[c]]][c] = field_.one();
      continue;
    }
    for (const auto& [j, a] : it->second.coords()) M[pos.at(j)][c] = a;
  }
  // Gauss-Jordan over the field
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && field_.is_zero(M[piv][col])) ++piv;
    if (piv == n)
      throw std::invalid_argument("non-invertible finite modification table");
    std::swap(M[piv], M[col]);
    std::swap(I[piv], I[col]);
    Scalar d = field_.inv(M[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      M[col][c] = field_.mul(d, M[col][c]);
      I[col][c] = field_.mul(d, I[col][c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field_.is_zero(M[r][col])) continue;
      Scalar f = M[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        M[r][c] = field_.sub(M[r][c], field_.mul(f, M[col][c]));
        I[r][c] = field_.sub(I[r][c], field_.mul(f, I[col][c]));
      }
    }
  }
  // core^-1(e_j) applies sigma^-1 to the solved coordinates
  std::map<std::size_t, Vector> inv_images;
  for (std::size_t c = 0; c < n; ++c) {
    Vector v(field_);
    for (std::size_t r = 0; r < n; ++r)
      if (!field_.is_zero(I[r][c]))
        v.set_coord(idx[r], field_.apply_aut(sigma_, I[r][c]));
    inv_images.emplace(idx[c], std::move(v));
  }
  auto out = finite_modification(field_, std::move(inv_images), sigma_);
  out.scale_ = inv_scale;
  return out;
}

SemilinearMap compose(const SemilinearMap& m1, const SemilinearMap& m2) {
  return m1.then(m2);
}

SemilinearMap invert(const SemilinearMap& m) { return m.inverse(); }

// ---------------------------------------------------------------------------
// Equivalence and the identity test

bool equivalent_mod_scalar(const SemilinearMap& m1, const SemilinearMap& m2,
                           perm::Window w) {
  if (!(m1.field() == m2.field()) || m1.sigma() != m2.sigma()) return false;
  const Field& f = m1.field();
  Vector u = m1.apply_basis(0);
  Vector v = m2.apply_basis(0);
  auto lead = v.leading_index();
  if (!lead || f.is_zero(u.coord(*lead))) return u == v;  // only if both zero maps
  Scalar alpha = f.div(u.coord(*lead), v.coord(*lead));
  if (f.is_zero(alpha)) return false;
  for (perm::Point i = 0; i < w.bound; ++i)
    if (!(m1.apply_basis(i) == m2.apply_basis(i).scale(alpha))) return false;
  return true;
}

bool nsim_identity(const SemilinearMap& m, perm::Window w) {
  if (m.sigma() != FieldAut::Identity) return true;
  const Field& f = m.field();
  Vector v0 = m.apply_basis(0);
  if (v0.coords().size() != 1 || v0.coords().begin()->first != 0)
    return true;  // image of e_0 is independent of e_0
  Scalar alpha = v0.coord(0);
  for (perm::Point i = 1; i < w.bound; ++i) {
    Vector vi = m.apply_basis(i);
    if (!(vi == Vector::basis(f, i).scale(alpha))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// GslElement

GslElement::GslElement(SemilinearMap m) : rep_(std::move(m)) {
  Vector v0 = rep_.apply_basis(0);
  auto lead = v0.leading_index();
  if (!lead)
    throw std::invalid_argument("semilinear map killed a basis vector");
  Scalar anchor = v0.coord(*lead);
  if (!(anchor == rep_.field().one()))
    rep_ = SemilinearMap::scaled(rep_.field().inv(anchor), rep_);
}

GslElement GslElement::then(const GslElement& o) const {
  return GslElement(rep_.then(o.rep_));
}

GslElement GslElement::inverse() const { return GslElement(rep_.inverse()); }

GslElement GslElement::conj(const GslElement& by) const {
  return GslElement(by.rep_.inverse().then(rep_).then(by.rep_));
}

GslElement GslElement::comm(const GslElement& a, const GslElement& b) {
  return GslElement(
      a.rep_.inverse().then(b.rep_.inverse()).then(a.rep_).then(b.rep_));
}

GslElement GslElement::power(long long k) const {
  GslElement base = k >= 0 ? *this : inverse();
  long long reps = k >= 0 ? k : -k;
  GslElement acc(SemilinearMap::identity(rep_.field()));
  for (long long i = 0; i < reps; ++i) acc = acc.then(base);
  return acc;
}

bool GslElement::equal_on(const GslElement& o, perm::Window w) const {
  if (rep_.sigma() != o.rep_.sigma()) return false;
  for (perm::Point i = 0; i < w.bound; ++i)
    if (!(rep_.apply_basis(i) == o.rep_.apply_basis(i))) return false;
  return true;
}

GslElement delta_embed(const Field& f, perm::ExprPtr p) {
  return GslElement(SemilinearMap::perm_induced(f, std::move(p)));
}

// ---------------------------------------------------------------------------
// Subspaces

namespace {

// Subtracts pivot rows until v has no coordinate at any pivot index.
Vector reduce_against(const std::map<std::size_t, Vector>& pivots, Vector v) {
  const Field& f = v.field();
  for (const auto& [lead, row] : pivots) {
    Scalar c = v.coord(lead);
    if (!f.is_zero(c)) v = v.sub(row.scale(c));
  }
  return v;
}

void insert_row(std::map<std::size_t, Vector>& pivots, Vector v) {
  const Field& f = v.field();
  v = reduce_against(pivots, v);
  auto lead = v.leading_index();
  if (!lead) return;
  v = v.scale(f.inv(v.coord(*lead)));
  for (auto& [l, row] : pivots) {
    (void)l;
    Scalar c = row.coord(*lead);
    if (!f.is_zero(c)) row = row.sub(v.scale(c));
  }
  pivots.emplace(*lead, std::move(v));
}

}  // namespace

Subspace Subspace::zero(const Field& f) { return Subspace(f); }

Subspace Subspace::span(const Field& f, const std::vector<Vector>& generators) {
  std::map<std::size_t, Vector> pivots;
  for (const auto& g : generators) {
    if (!(g.field() == f)) throw std::invalid_argument("field mismatch in span");
    insert_row(pivots, g);
  }
  Subspace s(f);
  for (auto& [lead, row] : pivots) {
    (void)lead;
    s.basis_.push_back(std::move(row));
  }
  return s;
}

bool Subspace::member(const Vector& v) const {
  if (!(v.field() == field_)) throw std::invalid_argument("field mismatch");
  std::map<std::size_t, Vector> pivots;
  for (const auto& row : basis_) pivots.emplace(*row.leading_index(), row);
  return reduce_against(pivots, v).is_zero();
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> gens = basis_;
  gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
  return span(field_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (!(o.field_ == field_)) throw std::invalid_argument("field mismatch");
  // Zassenhaus: row-reduce [S S; T 0]; rows whose left half vanished have
  // right halves spanning the intersection.
  std::size_t offset = 1;
  for (const auto& v : basis_) offset = std::max(offset, v.max_index() + 1);
  for (const auto& v : o.basis_) offset = std::max(offset, v.max_index() + 1);

  std::map<std::size_t, Vector> pivots;
  for (const auto& v : basis_) {
    Vector row(field_);
    for (const auto& [i, a] : v.coords()) {
      row.set_coord(i, a);
      row.set_coord(i + offset, a);
    }
    insert_row(pivots, row);
  }
  for (const auto& v : o.basis_) insert_row(pivots, v);

  std::vector<Vector> gens;
  for (const auto& [lead, row] : pivots) {
    if (lead < offset) continue;
    Vector g(field_);
    for (const auto& [i, a] : row.coords()) g.set_coord(i - offset, a);
    gens.push_back(std::move(g));
  }
  return span(field_, gens);
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!member(v)) return false;
  return true;
}

std::string Subspace::serialize() const {
  std::string s;
  for (const auto& v : basis_) {
    if (!s.empty()) s += ";";
    s += v.serialize();
  }
  return s.empty() ? field_.name() + "|<zero space>" : s;
}

Subspace induced(const SemilinearMap& m, const Subspace& s) {
  std::vector<Vector> images;
  for (const auto& v : s.basis()) images.push_back(m.apply(v));
  return Subspace::span(s.field(), images);
}

Subspace induced(const GslElement& g, const Subspace& s) {
  return induced(g.rep(), s);
}

// ---------------------------------------------------------------------------
// Probe spaces

bool probe_space_membership(int which, const Vector& v) {
  const Field& f = v.field();
  switch (which) {
    case 1:
      for (const auto& [i, a] : v.coords()) {
        (void)a;
        if (i % 2 == 1) return false;
      }
      return true;
    case 2:
      for (const auto& [i, a] : v.coords()) {
        (void)a;
        if (i % 2 == 0) return false;
      }
      return true;
    case 3: {
      std::set<std::size_t> blocks;
      for (const auto& [i, a] : v.coords()) { (void)a; blocks.insert(i / 2); }
      for (std::size_t j : blocks)
        if (!(v.coord(2 * j) == v.coord(2 * j + 1))) return false;
      return true;
    }
    case 4: {
      // span(e_1+e_2, e_3+e_4, ...): decided by echelon reduction against
      // the generators meeting the support window.
      std::vector<Vector> gens;
      std::size_t m = v.max_index();
      for (std::size_t j = 0; 2 * j + 1 <= m; ++j)
        gens.push_back(Vector::basis(f, 2 * j + 1).add(Vector::basis(f, 2 * j + 2)));
      return Subspace::span(f, gens).member(v);
    }
    case 5: {
      std::set<std::size_t> blocks;
      for (const auto& [i, a] : v.coords()) { (void)a; blocks.insert(i / 2); }
      for (std::size_t j : blocks) {
        Scalar alpha = f.element(j);
        if (!(v.coord(2 * j + 1) == f.mul(alpha, v.coord(2 * j)))) return false;
      }
      return true;
    }
    default:
      throw std::invalid_argument("probe space index must be 1..5");
  }
}

// ---------------------------------------------------------------------------
// Property (D)

bool property_D_check(const SemilinearMap& m, std::span<const Vector> samples) {
  auto f = m.finitary_perm();
  if (!f)
    throw std::invalid_argument("property check needs a finitary-certified map");
  std::vector<Vector> moved;
  for (perm::Point i : f->support())
    moved.push_back(Vector::basis(m.field(), i));
  Subspace W = Subspace::span(m.field(), moved);
  for (const Vector& v : samples)
    if (!W.member(v.sub(m.apply(v)))) return false;
  return true;
}

Vector refute_property_D(const perm::ExprPtr& infinite_swaps, const Subspace& W) {
  const perm::Atom* a = nullptr;
  if (auto* node = std::get_if<perm::AtomNode>(&infinite_swaps->node()))
    a = node->atom.get();
  if (!a || !a->swap_family)
    throw std::invalid_argument(
        "refutation needs an atom certifying infinitely many swapped pairs");

  std::set<std::size_t> covered;
  std::size_t max_covered = 0;
  for (const auto& row : W.basis())
    for (const auto& [i, c] : row.coords()) {
      (void)c;
      covered.insert(i);
      max_covered = std::max(max_covered, i);
    }

  SemilinearMap m = SemilinearMap::perm_induced(W.field(), infinite_swaps);
  for (std::uint64_t k = 0; k <= max_covered + 1; ++k) {
    auto [u, v] = a->swap_family(k);
    if (covered.count(u) || covered.count(v)) continue;
    Vector x = Vector::basis(W.field(), u);
    Vector diff = x.sub(m.apply(x));
    if (W.member(diff))
      throw std::logic_error("swap certificate produced an absorbed witness");
    return x;
  }
  throw std::logic_error("swap family exhausted without leaving the carrier");
}

}  // namespace symlift::vspace
