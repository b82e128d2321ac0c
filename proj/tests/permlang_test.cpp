#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symlift/coding_ce.hpp"
#include "symlift/coding_pi2.hpp"
#include "symlift/permlang.hpp"
#include "symlift/sampling.hpp"

using namespace symlift;
using perm::ExprPtr;

namespace {

perm::AtomRegistry test_registry() {
  auto reg = perm::base_registry();
  pi2::register_atoms(reg, pi2::default_scheme_2());
  ce::register_atoms(reg, ce::default_scheme_z(), ce::Enumerator::evens(8));
  return reg;
}

}  // namespace

TEST_CASE("parse literals and combinators") {
  auto reg = test_registry();

  auto cyc = permlang::parse("(0 1)", reg);
  CHECK(perm::equal_trees(*cyc, *perm::fin(perm::FinPerm::transposition(0, 1))));

  auto comm = permlang::parse("[g0, b^{w^2}]", reg);
  auto want = perm::comm(
      perm::atom(reg.get("g0")),
      perm::conj(perm::atom(reg.get("b")), perm::pow(perm::atom(reg.get("w")), 2)));
  CHECK(perm::equal_trees(*comm, *want));

  auto conj = permlang::parse("tau^{z^3}", reg);
  auto want2 = perm::conj(perm::atom(reg.get("tau")),
                          perm::pow(perm::atom(reg.get("z")), 3));
  CHECK(perm::equal_trees(*conj, *want2));

  auto param = permlang::parse("p[3]", reg);
  CHECK(perm::equal_trees(*param, *perm::atom(reg.get("p", 3))));

  auto neg = permlang::parse("z^-2", reg);
  CHECK(perm::equal_trees(*neg, *perm::pow(perm::atom(reg.get("z")), -2)));

  auto primed = permlang::parse("z''", reg);
  CHECK(perm::equal_trees(*primed,
                          *perm::inv(perm::inv(perm::atom(reg.get("z"))))));

  CHECK(perm::equal_trees(*permlang::parse("id", reg), *perm::atom(reg.get("id"))));
}

TEST_CASE("parse errors carry positions") {
  auto reg = test_registry();
  CHECK_THROWS_AS(permlang::parse("(0 1", reg), permlang::ParseError);
  CHECK_THROWS_AS(permlang::parse("nosuch", reg), permlang::ParseError);
  CHECK_THROWS_AS(permlang::parse("(0 0)", reg), permlang::ParseError);
  CHECK_THROWS_AS(permlang::parse("(5)", reg), permlang::ParseError);
  CHECK_THROWS_AS(permlang::parse("w**g0", reg), permlang::ParseError);
  CHECK_THROWS_AS(permlang::parse("", reg), permlang::ParseError);

  try {
    permlang::parse("w * nosuch", reg);
    CHECK(false);
  } catch (const permlang::ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("print canonical forms") {
  auto reg = test_registry();
  CHECK(permlang::print(*perm::fin(perm::FinPerm::transposition(0, 1)), reg) ==
        "(0 1)");
  CHECK(permlang::print(*perm::conj(perm::atom(reg.get("tau")),
                                    perm::pow(perm::atom(reg.get("z")), 1)),
                        reg) == "tau^{z^1}");
  auto three = perm::prod({perm::atom(reg.get("w")), perm::atom(reg.get("g0")),
                           perm::atom(reg.get("g1"))});
  CHECK(permlang::print(*three, reg) == "w*g0*g1");
  CHECK(permlang::print(*perm::identity(), reg) == "id");

  // unregistered atoms are a print error
  auto foreign = std::make_shared<perm::Atom>();
  foreign->name = "ghost";
  foreign->forward = [](perm::Point x) { return x; };
  foreign->inverse = [](perm::Point x) { return x; };
  perm::AtomRegistry empty;
  CHECK_THROWS_AS(permlang::print(*perm::atom(foreign), empty),
                  std::invalid_argument);
}

TEST_CASE("print inserts parentheses where the grammar needs them") {
  auto reg = test_registry();
  auto z = perm::atom(reg.get("z"));
  auto tau = perm::atom(reg.get("tau"));

  auto nested_pow = perm::pow(perm::pow(z, 2), 3);
  CHECK(permlang::print(*nested_pow, reg) == "(z^2)^3");
  CHECK(perm::equal_trees(*permlang::parse("(z^2)^3", reg), *nested_pow));

  auto inv_pow = perm::inv(perm::pow(z, 2));
  CHECK(permlang::print(*inv_pow, reg) == "(z^2)'");

  auto prod_in_prod = perm::prod({tau, perm::prod({z, tau})});
  auto text = permlang::print(*prod_in_prod, reg);
  CHECK(text == "tau*(z*tau)");
  CHECK(perm::equal_trees(*permlang::parse(text, reg), *prod_in_prod));

  auto comm_pow = perm::pow(perm::comm(tau, z), 2);
  CHECK(perm::equal_trees(*permlang::parse(permlang::print(*comm_pow, reg), reg),
                          *comm_pow));
}

TEST_CASE("round-trip on random expressions") {
  auto reg = test_registry();
  sampling::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    auto e = sampling::random_expr(rng, reg, 4);
    auto text = permlang::print(*e, reg);
    INFO("text: " << text);
    auto back = permlang::parse(text, reg);
    CHECK(perm::equal_trees(*e, *back));
    // printing is idempotent on parse results
    CHECK(permlang::print(*back, reg) == text);
  }
}
