#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlift/sampling.hpp"
#include "symlift/vspace.hpp"

using namespace symlift;
using vspace::Field;
using vspace::FieldAut;
using vspace::Scalar;
using vspace::SemilinearMap;
using vspace::Subspace;
using vspace::Vector;

TEST_CASE("field arithmetic") {
  auto q = Field::rationals();
  CHECK(q.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
  CHECK(q.inv(Scalar(-2, 3)) == Scalar(-3, 2));

  auto gf5 = Field::prime(5);
  CHECK(gf5.mul(Scalar(3), Scalar(4)) == Scalar(2));
  CHECK(gf5.inv(Scalar(2)) == Scalar(3));
  CHECK(gf5.neg(Scalar(0)) == Scalar(0));
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(101), std::invalid_argument);

  auto gf4 = Field::gf4();
  // x * x = x + 1, x * (x + 1) = 1, (x + 1)^2 = x
  CHECK(gf4.mul(Scalar(2), Scalar(2)) == Scalar(3));
  CHECK(gf4.mul(Scalar(2), Scalar(3)) == Scalar(1));
  CHECK(gf4.mul(Scalar(3), Scalar(3)) == Scalar(2));
  CHECK(gf4.add(Scalar(2), Scalar(3)) == Scalar(1));

  // Frobenius is an involution and multiplicative
  for (long long a = 0; a < 4; ++a) {
    Scalar s(a);
    CHECK(gf4.apply_aut(FieldAut::Frobenius,
                        gf4.apply_aut(FieldAut::Frobenius, s)) == s);
  }
  CHECK_FALSE(gf5.aut_available(FieldAut::Frobenius));
  CHECK_THROWS_AS(q.apply_aut(FieldAut::Frobenius, Scalar(1)),
                  std::invalid_argument);

  CHECK(Field::parse("gf7") == Field::prime(7));
  CHECK(Field::parse("q") == Field::rationals());
}

TEST_CASE("rational enumeration by height") {
  auto q = Field::rationals();
  CHECK(q.element(0) == Scalar(0));
  CHECK(q.element(1) == Scalar(1));
  CHECK(q.element(2) == Scalar(-1));
  CHECK(q.element(3) == Scalar(2));
  CHECK(q.element(4) == Scalar(-2));
  CHECK(q.element(5) == Scalar(1, 2));
  // distinct for a while
  std::set<std::pair<long long, long long>> seen;
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto e = q.element(i);
    CHECK(seen.insert({e.num(), e.den()}).second);
  }
}

TEST_CASE("vectors") {
  auto q = Field::rationals();
  auto v = Vector::basis(q, 0).scale(Scalar(3)).add(Vector::basis(q, 2));
  CHECK(v.coord(0) == Scalar(3));
  CHECK(v.coord(1) == Scalar(0));
  CHECK(v.sub(v).is_zero());

  auto text = v.serialize();
  CHECK(text == "q|0:3/1,2:1/1");
  CHECK(Vector::deserialize(text) == v);
  CHECK(Vector::deserialize("gf5|1:4/1") == Vector::basis(Field::prime(5), 1).scale(Scalar(4)));
}

TEST_CASE("semilinear apply") {
  auto q = Field::rationals();
  auto m = SemilinearMap::perm_induced(
      q, perm::fin(perm::FinPerm::transposition(0, 1)));
  CHECK(m.apply(Vector::basis(q, 0)) == Vector::basis(q, 1));

  // Frobenius twist: m(x * e0) = x^2 * m(e0) over gf4
  auto gf4 = Field::gf4();
  auto mf = SemilinearMap::perm_induced(
      gf4, perm::fin(perm::FinPerm::transposition(0, 1)), FieldAut::Frobenius);
  auto in = Vector::basis(gf4, 0).scale(Scalar(2));
  auto out = mf.apply(in);
  CHECK(out == Vector::basis(gf4, 1).scale(Scalar(3)));
  // brute force over all four scalars
  for (long long c = 0; c < 4; ++c) {
    auto lhs = mf.apply(Vector::basis(gf4, 0).scale(Scalar(c)));
    auto rhs = mf.apply(Vector::basis(gf4, 0)).scale(gf4.mul(Scalar(c), Scalar(c)));
    CHECK(lhs == rhs);
  }

  auto idm = SemilinearMap::identity(q);
  auto v = Vector::basis(q, 3).scale(Scalar(7, 2)).add(Vector::basis(q, 0));
  CHECK(idm.apply(v) == v);
}

TEST_CASE("compose and invert") {
  auto q = Field::rationals();
  auto p = perm::FinPerm::from_cycle({0, 1, 2});
  auto r = perm::FinPerm::transposition(1, 3);
  auto mp = SemilinearMap::perm_induced(q, perm::fin(p));
  auto mr = SemilinearMap::perm_induced(q, perm::fin(r));

  auto both = mp.then(mr);
  auto direct = SemilinearMap::perm_induced(q, perm::fin(p.then(r)));
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(both.apply_basis(i) == direct.apply_basis(i));

  auto scaled = SemilinearMap::scaled(Scalar(5), SemilinearMap::identity(q));
  auto unscaled = scaled.inverse();
  CHECK(unscaled.apply(Vector::basis(q, 2)) ==
        Vector::basis(q, 2).scale(Scalar(1, 5)));

  // Frobenius composed with itself is the identity twist
  auto gf4 = Field::gf4();
  auto mf = SemilinearMap::perm_induced(gf4, perm::identity(), FieldAut::Frobenius);
  CHECK(mf.then(mf).sigma() == FieldAut::Identity);
  CHECK(mf.inverse().sigma() == FieldAut::Frobenius);

  // m then m^-1 is the identity map
  auto back = mp.then(mp.inverse());
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(back.apply_basis(i) == Vector::basis(q, i));
}

TEST_CASE("finite modification tables") {
  auto gf5 = Field::prime(5);
  std::map<std::size_t, Vector> images;
  images.emplace(0, Vector::basis(gf5, 1));
  images.emplace(1, Vector::basis(gf5, 0).add(Vector::basis(gf5, 1)));
  auto m = SemilinearMap::finite_modification(gf5, images);
  auto minv = m.inverse();
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(minv.apply(m.apply_basis(i)) == Vector::basis(gf5, i));
    CHECK(m.apply(minv.apply_basis(i)) == Vector::basis(gf5, i));
  }

  std::map<std::size_t, Vector> bad;
  bad.emplace(0, Vector::basis(gf5, 1));
  bad.emplace(1, Vector::basis(gf5, 1).scale(Scalar(2)));
  auto singular = SemilinearMap::finite_modification(gf5, bad);
  CHECK_THROWS_AS(singular.inverse(), std::invalid_argument);

  // mixing a finitary permutation rule with a table works through tables
  auto mp = SemilinearMap::perm_induced(
      gf5, perm::fin(perm::FinPerm::transposition(0, 2)));
  auto mixed = mp.then(m);
  CHECK(mixed.apply_basis(2) == Vector::basis(gf5, 1));

  // no closed form against an infinite permutation rule
  auto inf = SemilinearMap::perm_induced(gf5, perm::atom(perm::atom_swapadj()));
  CHECK_THROWS_AS(inf.then(m), std::invalid_argument);
}

TEST_CASE("delta embedding") {
  auto q = Field::rationals();
  auto d = vspace::delta_embed(q, perm::fin(perm::FinPerm::transposition(0, 1)));
  CHECK(d.rep().apply_basis(0) == Vector::basis(q, 1));
  CHECK(d.rep().apply_basis(1) == Vector::basis(q, 0));

  auto e = vspace::delta_embed(q, perm::identity());
  CHECK_FALSE(vspace::nsim_identity(e.rep(), perm::Window(16)));

  sampling::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto p1 = sampling::random_finperm(rng, 12, 6);
    auto p2 = sampling::random_finperm(rng, 12, 6);
    auto lhs = vspace::delta_embed(q, perm::fin(p1))
                   .then(vspace::delta_embed(q, perm::fin(p2)));
    auto rhs = vspace::delta_embed(q, perm::fin(p1.then(p2)));
    CHECK(lhs.equal_on(rhs, perm::Window(16)));
  }
}

TEST_CASE("scalar equivalence and the identity test") {
  auto q = Field::rationals();
  auto m = SemilinearMap::perm_induced(
      q, perm::fin(perm::FinPerm::transposition(0, 1)));
  auto ms = SemilinearMap::scaled(Scalar(7), m);
  CHECK(vspace::equivalent_mod_scalar(m, ms, perm::Window(16)));

  auto gf4 = Field::gf4();
  auto plain = SemilinearMap::perm_induced(gf4, perm::identity());
  auto twisted = SemilinearMap::perm_induced(gf4, perm::identity(),
                                             FieldAut::Frobenius);
  CHECK_FALSE(vspace::equivalent_mod_scalar(plain, twisted, perm::Window(8)));

  auto d1 = vspace::delta_embed(q, perm::fin(perm::FinPerm::transposition(0, 1)));
  auto d2 = vspace::delta_embed(q, perm::fin(perm::FinPerm::from_cycle({0, 1, 2})));
  CHECK_FALSE(vspace::equivalent_mod_scalar(d1.rep(), d2.rep(), perm::Window(8)));

  CHECK_FALSE(vspace::nsim_identity(SemilinearMap::identity(q), perm::Window(8)));
  CHECK_FALSE(vspace::nsim_identity(
      SemilinearMap::scaled(Scalar(3), SemilinearMap::identity(q)),
      perm::Window(8)));
  CHECK(vspace::nsim_identity(d1.rep(), perm::Window(8)));
  CHECK(vspace::nsim_identity(twisted, perm::Window(8)));
}

TEST_CASE("subspaces") {
  auto gf2 = Field::prime(2);
  auto e0 = Vector::basis(gf2, 0);
  auto e1 = Vector::basis(gf2, 1);
  auto e2 = Vector::basis(gf2, 2);

  CHECK(Subspace::span(gf2, {e0, e0.add(e1)}) == Subspace::span(gf2, {e0, e1}));

  auto S = Subspace::span(gf2, {e0, e1});
  auto T = Subspace::span(gf2, {e1, e2});
  auto I = S.intersect(T);
  CHECK(I == Subspace::span(gf2, {e1}));

  // brute force over all vectors of the 3-dimensional space
  for (int mask = 0; mask < 8; ++mask) {
    Vector v(gf2);
    for (int bit = 0; bit < 3; ++bit)
      if (mask & (1 << bit)) v.set_coord(bit, Scalar(1));
    CHECK(I.member(v) == (S.member(v) && T.member(v)));
  }

  CHECK(S.sum(S) == S);
  CHECK(S.sum(T).dim() == 3);
  CHECK(S.contains(Subspace::span(gf2, {e0.add(e1)})));
  CHECK_FALSE(S.contains(T));
  CHECK(Subspace::zero(gf2).dim() == 0);
  CHECK_FALSE(Subspace::zero(gf2).member(e0));
}

TEST_CASE("induced subspace maps") {
  auto gf5 = Field::prime(5);
  auto d = vspace::delta_embed(gf5, perm::fin(perm::FinPerm::transposition(0, 1)));
  auto S = Subspace::span(gf5, {Vector::basis(gf5, 0)});
  CHECK(vspace::induced(d, S) == Subspace::span(gf5, {Vector::basis(gf5, 1)}));

  auto idm = vspace::delta_embed(gf5, perm::identity());
  sampling::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    auto A = sampling::random_subspace(rng, gf5, 4, 8);
    auto B = sampling::random_subspace(rng, gf5, 4, 8);
    CHECK(vspace::induced(idm, A) == A);
    auto m = vspace::delta_embed(gf5, perm::fin(sampling::random_finperm(rng, 10, 6)));
    CHECK(vspace::induced(m, A.intersect(B)) ==
          vspace::induced(m, A).intersect(vspace::induced(m, B)));
    CHECK(vspace::induced(m, A.sum(B)) ==
          vspace::induced(m, A).sum(vspace::induced(m, B)));
  }
}

TEST_CASE("probe space membership") {
  auto q = Field::rationals();
  auto e0 = Vector::basis(q, 0);
  auto e1 = Vector::basis(q, 1);
  auto e2 = Vector::basis(q, 2);

  CHECK(vspace::probe_space_membership(1, e0));
  CHECK_FALSE(vspace::probe_space_membership(1, e1));
  CHECK(vspace::probe_space_membership(2, e1));
  CHECK(vspace::probe_space_membership(3, e0.add(e1)));
  CHECK_FALSE(vspace::probe_space_membership(3, e0));
  CHECK(vspace::probe_space_membership(4, e1.add(e2)));
  CHECK_FALSE(vspace::probe_space_membership(4, e0));
  CHECK_FALSE(vspace::probe_space_membership(4, e1));
  // alpha_0 = 0, so the first block generator is e0 alone; alpha_1 = 1
  CHECK(vspace::probe_space_membership(5, e0));
  CHECK(vspace::probe_space_membership(5, e2.add(Vector::basis(q, 3))));
  CHECK_FALSE(vspace::probe_space_membership(5, e1));
  CHECK_THROWS_AS(vspace::probe_space_membership(9, e0), std::invalid_argument);
}

TEST_CASE("difference absorption for finitary images") {
  auto q = Field::rationals();
  auto m = SemilinearMap::perm_induced(
      q, perm::fin(perm::FinPerm::transposition(0, 1)));
  auto v = Vector::basis(q, 0).scale(Scalar(3)).add(Vector::basis(q, 2));
  // v - m(v) = 3 e0 - 3 e1 lies in span(e0, e1)
  std::vector<Vector> samples{v};
  CHECK(vspace::property_D_check(m, samples));

  auto idm = SemilinearMap::identity(q);
  CHECK(vspace::property_D_check(idm, samples));

  sampling::Rng rng(5);
  auto gf5 = Field::prime(5);
  auto p = sampling::random_involution(rng, 10, 2, 2);
  auto m5 = SemilinearMap::perm_induced(gf5, perm::fin(p));
  std::vector<Vector> more;
  for (int i = 0; i < 100; ++i) more.push_back(sampling::random_vector(rng, gf5, 14));
  CHECK(vspace::property_D_check(m5, more));

  auto inf = SemilinearMap::perm_induced(q, perm::atom(perm::atom_swapadj()));
  CHECK_THROWS_AS(vspace::property_D_check(inf, samples), std::invalid_argument);
}

TEST_CASE("refuting difference absorption for certified infinite swaps") {
  auto q = Field::rationals();
  auto swap = perm::atom(perm::atom_swapadj());

  auto W = Subspace::span(q, {Vector::basis(q, 0).sub(Vector::basis(q, 1))});
  auto x = vspace::refute_property_D(swap, W);
  CHECK(x == Vector::basis(q, 2));
  auto m = SemilinearMap::perm_induced(q, swap);
  CHECK_FALSE(W.member(x.sub(m.apply(x))));

  auto x0 = vspace::refute_property_D(swap, Subspace::zero(q));
  CHECK(x0 == Vector::basis(q, 0));

  CHECK_THROWS_AS(vspace::refute_property_D(perm::atom(perm::atom_z()), W),
                  std::invalid_argument);

  sampling::Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    auto R = sampling::random_subspace(rng, q, 8, 16);
    auto wit = vspace::refute_property_D(swap, R);
    CHECK_FALSE(R.member(wit.sub(m.apply(wit))));
  }
}

TEST_CASE("semilinearity law") {
  auto gf4 = Field::gf4();
  sampling::Rng rng(7);
  auto m = SemilinearMap::perm_induced(
      gf4, perm::fin(perm::FinPerm::from_cycle({0, 1, 2})), FieldAut::Frobenius);
  for (int i = 0; i < 100; ++i) {
    auto a = gf4.element(sampling::pick(rng, 0, 3));
    auto b = gf4.element(sampling::pick(rng, 0, 3));
    auto u = sampling::random_vector(rng, gf4, 8);
    auto v = sampling::random_vector(rng, gf4, 8);
    auto lhs = m.apply(u.scale(a).add(v.scale(b)));
    auto rhs = m.apply(u).scale(gf4.apply_aut(FieldAut::Frobenius, a)).add(
        m.apply(v).scale(gf4.apply_aut(FieldAut::Frobenius, b)));
    CHECK(lhs == rhs);
  }
}
