#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symlift/intalg.hpp"
#include "symlift/sampling.hpp"

using namespace symlift;
using intalg::BElem;
using intalg::Endpoint;

TEST_CASE("normal form") {
  auto a = intalg::join(BElem::interval(Rational(0), Rational(1)),
                        BElem::interval(Rational(1), Rational(2)));
  CHECK(a == BElem::interval(Rational(0), Rational(2)));  // touching merge

  auto c = intalg::complement(BElem::interval(Rational(0), Rational(1)));
  REQUIRE(c.parts().size() == 2);
  CHECK(c.parts()[0].lo == Endpoint::neg_inf());
  CHECK(c.parts()[0].hi == Endpoint::at(Rational(0)));
  CHECK(c.parts()[1].lo == Endpoint::at(Rational(1)));
  CHECK(c.parts()[1].hi == Endpoint::pos_inf());

  CHECK(intalg::complement(BElem::zero()) == BElem::one());
  CHECK(intalg::complement(BElem::one()) == BElem::zero());
  CHECK_THROWS_AS(BElem::interval(Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("meet with a pointwise cross-check") {
  auto a = BElem::interval(Rational(0), Rational(2));
  auto b = BElem::interval(Rational(1), Rational(3));
  auto m = intalg::meet(a, b);
  CHECK(m == BElem::interval(Rational(1), Rational(2)));
  // sample 20 rationals against pointwise membership
  for (long long i = -4; i < 16; ++i) {
    Rational q(i, 4);
    CHECK(m.contains_point(q) == (a.contains_point(q) && b.contains_point(q)));
  }
}

TEST_CASE("boolean laws on random elements") {
  sampling::Rng rng(2);
  for (int i = 0; i < 80; ++i) {
    auto x = sampling::random_belem(rng);
    auto y = sampling::random_belem(rng);
    auto z = sampling::random_belem(rng);
    CHECK(intalg::join(x, y) == intalg::join(y, x));
    CHECK(intalg::meet(x, intalg::join(y, z)) ==
          intalg::join(intalg::meet(x, y), intalg::meet(x, z)));
    CHECK(intalg::complement(intalg::join(x, y)) ==
          intalg::meet(intalg::complement(x), intalg::complement(y)));
    CHECK(intalg::complement(intalg::complement(x)) == x);
    CHECK(BElem::from_intervals(x.parts()) == x);  // normal form is a fixpoint
    CHECK(intalg::leq(intalg::meet(x, y), x));
    CHECK(intalg::leq(x, intalg::join(x, y)));
  }
}

TEST_CASE("parse and print") {
  CHECK(BElem::parse("0") == BElem::zero());
  CHECK(BElem::parse("1") == BElem::one());
  auto x = BElem::parse("[-inf,0/1);[1/2,3/4)");
  CHECK(x.parts().size() == 2);
  CHECK(BElem::parse(x.str()) == x);
  CHECK(BElem::unit_block(2).str() == "[2/1,3/1)");
  CHECK_THROWS_AS(BElem::parse("(0,1)"), std::invalid_argument);
}

TEST_CASE("induced automorphism on intervals") {
  auto t01 = perm::fin(perm::FinPerm::transposition(0, 1));

  CHECK(intalg::apply_H(t01, BElem::interval(Rational(0), Rational(1))) ==
        BElem::interval(Rational(1), Rational(2)));

  // [-1, 1/2) splits into the fixed negative part and a moved piece
  auto moved = intalg::apply_H(t01, BElem::interval(Rational(-1), Rational(1, 2)));
  auto want = intalg::join(BElem::interval(Rational(-1), Rational(0)),
                           BElem::interval(Rational(1), Rational(3, 2)));
  CHECK(moved == want);

  auto any = BElem::parse("[-3/2,5/2);[4/1,+inf)");
  CHECK(intalg::apply_H(perm::identity(), any) == any);

  // unbounded part through a finitary permutation: the tail is fixed
  auto c = intalg::complement(BElem::interval(Rational(0), Rational(1)));
  auto image = intalg::apply_H(t01, c);
  auto expect = intalg::join(BElem::interval(Endpoint::neg_inf(), Endpoint::at(Rational(1))),
                             BElem::interval(Endpoint::at(Rational(2)), Endpoint::pos_inf()));
  CHECK(image == expect);

  // fractional pieces ride along rigidly
  auto piece = intalg::apply_H(t01, BElem::interval(Rational(1, 3), Rational(1, 2)));
  CHECK(piece == BElem::interval(Rational(4, 3), Rational(3, 2)));

  // without a finitary certificate an unbounded part is refused
  intalg::InducedAut z(perm::atom(perm::atom_z()));
  CHECK_THROWS_AS(z.apply(c), std::runtime_error);

  CHECK(z.apply_point(Rational(7, 2)) == Rational(11, 2));  // z(3) = 5
  CHECK(z.apply_point(Rational(-7, 2)) == Rational(-7, 2));
}

TEST_CASE("induced maps preserve the algebra") {
  sampling::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto p = perm::fin(sampling::random_finperm(rng, 16, 6));
    auto x = sampling::random_belem(rng);
    auto y = sampling::random_belem(rng);
    CHECK(intalg::apply_H(p, intalg::join(x, y)) ==
          intalg::join(intalg::apply_H(p, x), intalg::apply_H(p, y)));
    CHECK(intalg::apply_H(p, intalg::complement(x)) ==
          intalg::complement(intalg::apply_H(p, x)));
  }
}

TEST_CASE("induced map is injective in the permutation") {
  sampling::Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    auto p = sampling::random_finperm(rng, 12, 4);
    auto q = sampling::random_finperm(rng, 12, 4);
    if (p == q) continue;
    bool differ = false;
    for (long long n = 0; n < 12; ++n) {
      auto block = BElem::unit_block(n);
      if (!(intalg::apply_H(perm::fin(p), block) ==
            intalg::apply_H(perm::fin(q), block)))
        differ = true;
    }
    CHECK(differ);
  }
}

TEST_CASE("moved regions") {
  auto cls = intalg::PhiClass::finitary(perm::FinPerm::transposition(0, 1));
  auto r = intalg::moved_region(cls, perm::Window(8));
  CHECK_FALSE(r.partial);
  CHECK(r.region == BElem::interval(Rational(0), Rational(2)));

  auto id = intalg::PhiClass::finitary(perm::FinPerm{});
  CHECK(intalg::moved_region(id, perm::Window(8)).region == BElem::zero());

  auto blk = intalg::PhiClass::certified_infinite(perm::atom(perm::atom_blk()));
  auto rb = intalg::moved_region(blk, perm::Window(8));
  CHECK(rb.partial);
  CHECK(rb.region == intalg::join(BElem::interval(Rational(0), Rational(2)),
                                  BElem::interval(Rational(4), Rational(6))));

  CHECK_THROWS_AS(
      intalg::PhiClass::certified_infinite(perm::atom(perm::atom_z())),
      std::invalid_argument);
}

TEST_CASE("the moved-region condition") {
  auto cls = intalg::PhiClass::finitary(perm::FinPerm::transposition(0, 1));
  CHECK(intalg::phi_holds(BElem::interval(Rational(0), Rational(1)), cls));
  CHECK_FALSE(intalg::phi_holds(BElem::interval(Rational(0), Rational(3)), cls));
  CHECK(intalg::phi_holds(BElem::zero(), cls));
  CHECK_FALSE(intalg::phi_holds(BElem::one(), cls));

  // downward closure: anything below a satisfying element satisfies it
  sampling::Rng rng(8);
  auto region = intalg::moved_region(cls, perm::Window(8)).region;
  for (int i = 0; i < 40; ++i) {
    auto below = intalg::meet(region, sampling::random_belem(rng));
    CHECK(intalg::phi_holds(below, cls));
  }

  // exhaustive sub-union check at small scale: unions of unit blocks
  auto big = intalg::PhiClass::finitary(
      perm::FinPerm::from_cycles({{0, 1}, {3, 4}}));
  auto sup = intalg::psi_check(big, perm::Window(8)).sup;
  for (int mask = 0; mask < 64; ++mask) {
    BElem u;
    for (int bit = 0; bit < 6; ++bit)
      if (mask & (1 << bit)) u = intalg::join(u, BElem::unit_block(bit));
    CHECK(intalg::phi_holds(u, big) == intalg::leq(u, sup));
  }
}

TEST_CASE("supremum discrimination") {
  auto fin = intalg::PhiClass::finitary(perm::FinPerm::transposition(0, 1));
  auto v = intalg::psi_check(fin, perm::Window(16));
  CHECK(v.kind == intalg::PsiVerdict::Kind::SupExists);
  CHECK(v.sup == BElem::interval(Rational(0), Rational(2)));

  auto id = intalg::PhiClass::finitary(perm::FinPerm{});
  auto vid = intalg::psi_check(id, perm::Window(16));
  CHECK(vid.kind == intalg::PsiVerdict::Kind::SupExists);
  CHECK(vid.sup == BElem::zero());

  auto blk = intalg::PhiClass::certified_infinite(perm::atom(perm::atom_blk()));
  auto vb = intalg::psi_check(blk, perm::Window(64));
  REQUIRE(vb.kind == intalg::PsiVerdict::Kind::NoSupEvidence);

  // the whole algebra as candidate: subtracting the first fixed block
  auto ref = vb.refute(BElem::one());
  CHECK(ref.kind == intalg::PsiRefutation::Kind::SmallerUpperBound);
  CHECK(ref.witness == intalg::diff(BElem::one(), BElem::unit_block(2)));

  // a non-upper-bound candidate: some moved block is not below it
  auto ref2 = vb.refute(BElem::interval(Rational(0), Rational(2)));
  CHECK(ref2.kind == intalg::PsiRefutation::Kind::PhiElementNotBelow);
  CHECK(intalg::phi_holds(ref2.witness, blk));
  CHECK_FALSE(intalg::leq(ref2.witness, BElem::interval(Rational(0), Rational(2))));

  CHECK_THROWS_AS(intalg::psi_check(blk, perm::Window(1)), std::invalid_argument);
}

TEST_CASE("verdicts are conjugation invariant") {
  auto fin = intalg::PhiClass::finitary(perm::FinPerm::transposition(0, 1));
  CHECK(intalg::psi_conjugation_invariance(fin, perm::FinPerm::transposition(1, 2),
                                           perm::Window(16)));

  auto blk = intalg::PhiClass::certified_infinite(perm::atom(perm::atom_blk()));
  CHECK(intalg::psi_conjugation_invariance(blk, perm::FinPerm::transposition(0, 4),
                                           perm::Window(64)));

  auto id = intalg::PhiClass::finitary(perm::FinPerm{});
  CHECK(intalg::psi_conjugation_invariance(id, perm::FinPerm::transposition(2, 5),
                                           perm::Window(16)));

  // the conjugated class reports the renamed moved set: conjugating blk by
  // (0 2) sends moved 0 to 2 and leaves 1, 4, 5 moved
  auto conj = blk.conjugate_by(perm::FinPerm::transposition(0, 2));
  std::set<perm::Point> moved;
  for (int k = 0; k < 4; ++k) moved.insert(conj.kth_moved_int(k));
  CHECK(moved == std::set<perm::Point>{1, 2, 4, 5});
  for (int k = 0; k < 4; ++k) {
    perm::Point n = conj.kth_moved_int(k);
    CHECK(perm::eval(*conj.action(), n) != n);
  }
}

TEST_CASE("kernel witness") {
  auto k = intalg::kernel_witness(perm::FinPerm::transposition(0, 1));
  CHECK(k.a == BElem::unit_block(0));
  bool contains_moved_block = false;
  for (const auto& el : k.image)
    if (el == BElem::unit_block(1)) contains_moved_block = true;
  CHECK(contains_moved_block);
  // the image of the subalgebra differs from it as a set
  std::set<std::string> original, image;
  for (const auto& el : k.subalgebra) original.insert(el.str());
  for (const auto& el : k.image) image.insert(el.str());
  CHECK(original != image);

  auto k2 = intalg::kernel_witness(perm::FinPerm::transposition(2, 5));
  CHECK(k2.a == BElem::unit_block(2));

  CHECK_THROWS_AS(intalg::kernel_witness(perm::FinPerm{}), std::invalid_argument);
}
