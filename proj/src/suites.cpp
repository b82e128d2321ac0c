#include "symlift/suites.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "symlift/coding_ce.hpp"
#include "symlift/coding_pi2.hpp"
#include "symlift/intalg.hpp"
#include "symlift/pairing.hpp"
#include "symlift/permlang.hpp"
#include "symlift/pipeline.hpp"
#include "symlift/sampling.hpp"
#include "symlift/vspace.hpp"

namespace symlift::suites {

namespace {

using report::Record;
using sampling::Rng;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string pad2(std::uint64_t n) {
  return (n < 10 ? "0" : "") + std::to_string(n);
}

void check(CriterionResult& r, const std::string& name, const std::string& inputs,
           const std::string& expected, const std::string& got) {
  r.records.push_back({name, inputs, expected, got, expected == got});
}

void check_true(CriterionResult& r, const std::string& name,
                const std::string& inputs, bool ok) {
  r.records.push_back({name, inputs, "true", ok ? "true" : "false", ok});
}

void finish(CriterionResult& r) {
  r.pass = true;
  for (const auto& rec : r.records) r.pass = r.pass && rec.pass;
}

std::vector<ce::Enumerator> sample_sets(std::uint64_t horizon) {
  return {ce::Enumerator::named("evens", horizon),
          ce::Enumerator::named("empty", horizon),
          ce::Enumerator::named("primes25", horizon)};
}

// An involution like blk but sparser: swaps (6j, 6j+1), fixes the other
// four residues. Used as the second certified-infinite sample.
perm::AtomPtr sparse_swap_atom() {
  auto a = std::make_shared<perm::Atom>();
  a->name = "swap6";
  auto f = [](perm::Point x) -> perm::Point {
    switch (x % 6) {
      case 0: return x + 1;
      case 1: return x - 1;
      default: return x;
    }
  };
  a->forward = f;
  a->inverse = f;
  a->involution = true;
  a->swap_family = [](std::uint64_t k) { return perm::SwapPair{6 * k, 6 * k + 1}; };
  a->fixed_family = [](std::uint64_t k) -> perm::Point {
    return 6 * (k / 4) + 2 + (k % 4);
  };
  return a;
}

// ---------------------------------------------------------------------------
// 1. Membership decode matches ground truth on the three sample sets.

CriterionResult c01_decode_exactness(std::uint64_t) {
  CriterionResult r;
  auto t0 = std::chrono::steady_clock::now();
  auto scheme = ce::default_scheme_z();
  for (const auto& set : sample_sets(200)) {
    perm::Window w(ce::window_covering_column0(scheme, set.horizon() + 2));
    for (std::uint64_t n = 0; n < 32; ++n) {
      auto verdict = ce::decode_membership(n, scheme, set, w);
      bool truth = *set.ground_truth(n);
      check(r, "c01.decode." + set.name() + ".n" + pad2(n),
            "horizon=" + std::to_string(set.horizon()), truth ? "in" : "not",
            verdict.in() ? "in" : "not");
    }
  }
  double secs = seconds_since(t0);
  check_true(r, "c01.runtime", std::to_string(secs) + "s", secs < 10.0);
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 2. Exactly one commutator fires per witnessed stage, split by parity.

CriterionResult c02_parity_split(std::uint64_t) {
  CriterionResult r;
  auto scheme = ce::default_scheme_z();
  for (const auto& set : sample_sets(200)) {
    perm::Window w(ce::window_covering_column0(scheme, set.horizon() + 2));
    for (std::uint64_t n = 0; n < 32; ++n) {
      if (!*set.ground_truth(n)) continue;
      auto probe = ce::probe_commutators(n, scheme, set, w);
      std::uint64_t t = *set.stage_of(n);
      std::string expected = t % 2 == 0 ? "g1-only" : "g0-only";
      std::string got = probe.g0_noncommuting == probe.g1_noncommuting
                            ? "both-or-neither"
                            : (probe.g0_noncommuting ? "g0-only" : "g1-only");
      check(r, "c02.parity." + set.name() + ".n" + pad2(n),
            "stage=" + std::to_string(t), expected, got);
    }
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Two-generator words realize every transposition below 32.

CriterionResult c03_transposition_words(std::uint64_t) {
  CriterionResult r;
  auto t0 = std::chrono::steady_clock::now();
  perm::Window w(128);
  for (std::uint64_t n = 0; n < 32; ++n) {
    bool all = true;
    for (std::uint64_t m = n + 1; m < 32; ++m) {
      auto word = pi2::transposition_word(n, m);
      auto want = perm::fin(perm::FinPerm::transposition(n, m));
      if (!perm::equal_on(*word, *want, w)) all = false;
    }
    check_true(r, "c03.words.n" + pad2(n), "window=128", all);
  }
  double secs = seconds_since(t0);
  check_true(r, "c03.runtime", std::to_string(secs) + "s", secs < 5.0);
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Stage bookkeeping: counts match the direct formula, are monotone in
// the stage bound, and the mirrored product doubles them on its column.

CriterionResult c04_stage_bookkeeping(std::uint64_t) {
  CriterionResult r;
  // independent pairing: same formula, written out locally
  auto local_code = [](std::uint64_t n, std::uint64_t t) {
    std::uint64_t s = n + t;
    return s * (s + 1) / 2 + t;
  };
  std::vector<pi2::Pi2Predicate> preds = {
      pi2::Pi2Predicate::always(), pi2::Pi2Predicate::never(),
      pi2::Pi2Predicate::below_column(), pi2::Pi2Predicate::even_column()};
  const std::vector<std::uint64_t> milestones = {100, 400, 1600};
  auto scheme = pi2::default_scheme_2();
  for (const auto& pred : preds) {
    std::map<std::uint64_t, std::uint64_t> prev;  // n -> count at previous S
    for (std::uint64_t S : milestones) {
      pi2::StageConstruction st(scheme, pred, S);
      bool counts_ok = true, monotone_ok = true;
      for (std::uint64_t n = 0; n < 16; ++n) {
        std::uint64_t direct = 0;
        for (std::uint64_t t = 0; local_code(n, t) < S; ++t)
          if (pred.holds(n, t)) ++direct;
        std::uint64_t got = st.two_cycle_count(n);
        if (got != direct) counts_ok = false;
        if (prev.count(n) && got < prev[n]) monotone_ok = false;
        prev[n] = got;
      }
      check_true(r, "c04.counts." + pred.name() + ".S" + std::to_string(S),
                 "n<16", counts_ok);
      check_true(r, "c04.monotone." + pred.name() + ".S" + std::to_string(S),
                 "n<16", monotone_ok);
    }
    // doubling at the middle milestone
    std::uint64_t S = 400;
    bool doubling_ok = true;
    for (std::uint64_t n = 0; n < 16; ++n) {
      pi2::StageConstruction st(scheme, pred, S);
      std::uint64_t consumed = st.consumed(n);
      std::uint64_t max_k = consumed == 0 ? 2 : consumed - 1;
      perm::Window w(pi2::window_covering_column(scheme, n, max_k));
      auto profile = pi2::product_on_column(n, pred, S, w);
      if (profile.count_of(2) != 2 * st.two_cycle_count(n)) doubling_ok = false;
    }
    check_true(r, "c04.doubling." + pred.name(), "S=400 n<16", doubling_ok);
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 5. Horizon classification matches the built-in answers.

CriterionResult c05_horizon_classification(std::uint64_t) {
  CriterionResult r;
  std::vector<pi2::Pi2Predicate> preds = {
      pi2::Pi2Predicate::always(), pi2::Pi2Predicate::never(),
      pi2::Pi2Predicate::below_column(), pi2::Pi2Predicate::even_column()};
  for (const auto& pred : preds) {
    bool all = true;
    std::string detail;
    for (std::uint64_t n = 0; n < 16; ++n) {
      auto verdict = pi2::decode_at_horizon(n, pred, 1600, 10);
      bool truth = *pred.truth_class(n);
      bool got_in = verdict.kind == perm::ClassVerdict::Kind::InfEvidence;
      bool got_out = verdict.kind == perm::ClassVerdict::Kind::FinTwoCycles;
      if (!(truth ? got_in : got_out)) {
        all = false;
        detail += " n=" + std::to_string(n);
      }
    }
    check_true(r, "c05.classify." + pred.name(),
               "S=1600 threshold=10" + detail, all);
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 6. Induced interval maps compose and preserve the algebra.

CriterionResult c06_interval_homomorphism(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  bool comp_ok = true, join_ok = true, meet_ok = true, compl_ok = true;
  for (int i = 0; i < 200; ++i) {
    auto p = sampling::random_finperm(rng, 24, 8);
    auto q = sampling::random_finperm(rng, 24, 8);
    auto x = sampling::random_belem(rng);
    auto y = sampling::random_belem(rng);
    auto ep = perm::fin(p);
    auto eq = perm::fin(q);
    auto composed = perm::prod({ep, eq});
    if (!(intalg::apply_H(composed, x) ==
          intalg::apply_H(eq, intalg::apply_H(ep, x))))
      comp_ok = false;
    if (!(intalg::apply_H(ep, intalg::join(x, y)) ==
          intalg::join(intalg::apply_H(ep, x), intalg::apply_H(ep, y))))
      join_ok = false;
    if (!(intalg::apply_H(ep, intalg::meet(x, y)) ==
          intalg::meet(intalg::apply_H(ep, x), intalg::apply_H(ep, y))))
      meet_ok = false;
    if (!(intalg::apply_H(ep, intalg::complement(x)) ==
          intalg::complement(intalg::apply_H(ep, x))))
      compl_ok = false;
  }
  check_true(r, "c06.composition", "200 pairs", comp_ok);
  check_true(r, "c06.join", "200 samples", join_ok);
  check_true(r, "c06.meet", "200 samples", meet_ok);
  check_true(r, "c06.complement", "200 samples", compl_ok);
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Supremum discrimination separates finite from certified-infinite
// swap sets.

bool verify_refutation(const intalg::PsiVerdict& verdict,
                       const intalg::BElem& candidate,
                       const intalg::BElem& window_moved,
                       const intalg::PhiClass& cls) {
  auto ref = verdict.refute(candidate);
  if (ref.kind == intalg::PsiRefutation::Kind::SmallerUpperBound) {
    bool strictly_below = intalg::leq(ref.witness, candidate) &&
                          !(ref.witness == candidate);
    bool still_bounding = intalg::leq(window_moved, ref.witness);
    return strictly_below && still_bounding;
  }
  return intalg::phi_holds(ref.witness, cls) &&
         !intalg::leq(ref.witness, candidate);
}

CriterionResult c07_sup_discrimination(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  perm::Window w(64);
  bool finitary_ok = true;
  for (int i = 0; i < 20; ++i) {
    auto p = sampling::random_involution(rng, 24, 1, 5);
    auto cls = intalg::PhiClass::finitary(p);
    auto verdict = intalg::psi_check(cls, w);
    if (verdict.kind != intalg::PsiVerdict::Kind::SupExists ||
        !(verdict.sup == intalg::moved_region(cls, w).region))
      finitary_ok = false;
  }
  check_true(r, "c07.finitary-sup", "20 involutions", finitary_ok);

  std::vector<std::pair<std::string, perm::ExprPtr>> infinite = {
      {"blk", perm::atom(perm::atom_blk())},
      {"swap6", perm::atom(sparse_swap_atom())}};
  for (const auto& [name, expr] : infinite) {
    auto cls = intalg::PhiClass::certified_infinite(expr);
    auto verdict = intalg::psi_check(cls, w);
    bool kind_ok = verdict.kind == intalg::PsiVerdict::Kind::NoSupEvidence;
    check_true(r, "c07.nosup." + name + ".kind", "window=64", kind_ok);
    if (!kind_ok) continue;
    auto window_moved = intalg::moved_region(cls, w).region;
    // the whole algebra bounds everything: expect a smaller upper bound
    check_true(r, "c07.nosup." + name + ".top", "candidate=1",
               verify_refutation(verdict, intalg::BElem::one(), window_moved, cls));
    // an upper bound with slack: moved region plus one fixed block
    auto slack = intalg::join(
        window_moved, intalg::BElem::unit_block(static_cast<long long>(
                          cls.kth_fixed_int(0))));
    check_true(r, "c07.nosup." + name + ".slack", "candidate=moved+fixed",
               verify_refutation(verdict, slack, window_moved, cls));
    // not an upper bound at all: expect a family element it misses
    check_true(r, "c07.nosup." + name + ".low", "candidate=[0,2)",
               verify_refutation(verdict, intalg::BElem::interval(Rational(0), Rational(2)),
                                 window_moved, cls));
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 8. Finitary images keep differences inside the moved span; certified
// infinite ones escape every candidate subspace.

CriterionResult c08_difference_absorption(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  std::vector<vspace::Field> fields = {vspace::Field::rationals(),
                                       vspace::Field::prime(5)};
  for (const auto& f : fields) {
    bool hold_ok = true;
    for (int reps = 0; reps < 5; ++reps) {
      auto p = sampling::random_finperm(rng, 16, 6);
      auto m = vspace::SemilinearMap::perm_induced(f, perm::fin(p));
      std::vector<vspace::Vector> samples;
      for (int i = 0; i < 100; ++i)
        samples.push_back(sampling::random_vector(rng, f, 20));
      if (!vspace::property_D_check(m, samples)) hold_ok = false;
    }
    check_true(r, "c08.holds." + f.name(), "5 maps x 100 vectors", hold_ok);

    bool refute_ok = true;
    auto blk = perm::atom(perm::atom_blk());
    auto m = vspace::SemilinearMap::perm_induced(f, blk);
    for (int i = 0; i < 25; ++i) {
      auto W = sampling::random_subspace(rng, f, 8, 20);
      auto x = vspace::refute_property_D(blk, W);
      auto diff = x.sub(m.apply(x));
      if (W.member(diff)) refute_ok = false;
    }
    check_true(r, "c08.refuted." + f.name(), "25 subspaces dim<=8", refute_ok);
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 9. Basis-permutation lifts form a group modulo scalars with exact
// semilinearity.

CriterionResult c09_scalar_group_laws(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  auto q = vspace::Field::rationals();
  perm::Window w(32);

  bool hom_ok = true, inj_ok = true;
  for (int i = 0; i < 100; ++i) {
    auto p1 = sampling::random_finperm(rng, 24, 6);
    auto p2 = sampling::random_finperm(rng, 24, 6);
    auto d1 = vspace::delta_embed(q, perm::fin(p1));
    auto d2 = vspace::delta_embed(q, perm::fin(p2));
    auto dprod = vspace::delta_embed(q, perm::fin(p1.then(p2)));
    if (!d1.then(d2).equal_on(dprod, w)) hom_ok = false;
    bool distinct = !(p1 == p2);
    bool equivalent =
        vspace::equivalent_mod_scalar(d1.rep(), d2.rep(), w);
    if (distinct == equivalent) inj_ok = false;
  }
  check_true(r, "c09.delta-homomorphism", "100 pairs window=32", hom_ok);
  check_true(r, "c09.delta-injective-mod-scalar", "100 pairs", inj_ok);

  for (const auto& f : {vspace::Field::gf4(), vspace::Field::prime(5)}) {
    bool scalar_ok = true;
    auto base = vspace::SemilinearMap::perm_induced(
        f, perm::fin(perm::FinPerm::transposition(0, 1)));
    for (int c = 1; c < f.order(); ++c) {
      auto alpha = f.from_int(c);
      auto scaled = vspace::SemilinearMap::scaled(alpha, base);
      if (!vspace::equivalent_mod_scalar(base, scaled, w)) scalar_ok = false;
      if (!vspace::GslElement(base).equal_on(vspace::GslElement(scaled), w))
        scalar_ok = false;
    }
    check_true(r, "c09.scalar-equivalence." + f.name(), "all nonzero scalars",
               scalar_ok);
  }

  auto gf4 = vspace::Field::gf4();
  bool semi_ok = true;
  for (int i = 0; i < 500; ++i) {
    auto p = sampling::random_finperm(rng, 12, 6);
    auto m = vspace::SemilinearMap::perm_induced(gf4, perm::fin(p),
                                                 vspace::FieldAut::Frobenius);
    auto alpha = gf4.element(sampling::pick(rng, 0, 3));
    auto beta = gf4.element(sampling::pick(rng, 0, 3));
    auto u = sampling::random_vector(rng, gf4, 12);
    auto v = sampling::random_vector(rng, gf4, 12);
    auto left = m.apply(u.scale(alpha).add(v.scale(beta)));
    auto right = m.apply(u)
                     .scale(gf4.apply_aut(vspace::FieldAut::Frobenius, alpha))
                     .add(m.apply(v).scale(
                         gf4.apply_aut(vspace::FieldAut::Frobenius, beta)));
    if (!(left == right)) semi_ok = false;
  }
  check_true(r, "c09.semilinearity.gf4", "500 samples with Frobenius", semi_ok);
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 10. Induced maps preserve the subspace lattice operations, cross-checked
// by a local dense echelon.

namespace dense {

// Independent reduced echelon over GF(5) on dense rows, used only to
// cross-check the library's canonical bases.
using Row = std::vector<int>;

std::vector<Row> rref(std::vector<Row> rows) {
  const int P = 5;
  auto inv = [](int a) {
    for (int x = 1; x < 5; ++x)
      if (a * x % 5 == 1) return x;
    return 0;
  };
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  for (auto& r : rows) r.resize(cols, 0);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    int d = inv(rows[pivot_row][c]);
    for (auto& x : rows[pivot_row]) x = x * d % P;
    for (std::size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == pivot_row || rows[rr][c] == 0) continue;
      int f = rows[rr][c];
      for (std::size_t cc = 0; cc < cols; ++cc)
        rows[rr][cc] = ((rows[rr][cc] - f * rows[pivot_row][cc]) % P + P) % P;
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

Row to_dense(const vspace::Vector& v, std::size_t cols) {
  Row r(cols, 0);
  for (const auto& [i, a] : v.coords()) r[i] = static_cast<int>(a.num());
  return r;
}

std::vector<Row> canon(const std::vector<vspace::Vector>& vs, std::size_t cols) {
  std::vector<Row> rows;
  for (const auto& v : vs) rows.push_back(to_dense(v, cols));
  return rref(std::move(rows));
}

}  // namespace dense

CriterionResult c10_lattice_preservation(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  auto gf5 = vspace::Field::prime(5);
  const std::size_t max_index = 12;
  const std::size_t cols = 2 * max_index + 4;

  bool sum_ok = true, meet_ok = true, sub_ok = true, cross_ok = true;
  for (int i = 0; i < 100; ++i) {
    auto S = sampling::random_subspace(rng, gf5, 6, max_index);
    auto T = sampling::random_subspace(rng, gf5, 6, max_index);
    vspace::SemilinearMap m =
        i % 2 == 0
            ? vspace::SemilinearMap::perm_induced(
                  gf5, perm::fin(sampling::random_finperm(rng, max_index + 4, 6)))
            : vspace::SemilinearMap::scaled(
                  gf5.from_int(1 + static_cast<long long>(sampling::pick(rng, 0, 3))),
                  vspace::SemilinearMap::perm_induced(
                      gf5, perm::fin(sampling::random_finperm(rng, max_index + 4, 6))));

    auto mS = vspace::induced(m, S);
    auto mT = vspace::induced(m, T);
    if (!(vspace::induced(m, S.sum(T)) == mS.sum(mT))) sum_ok = false;
    if (!(vspace::induced(m, S.intersect(T)) == mS.intersect(mT))) meet_ok = false;
    auto inside = S.intersect(T);
    if (!mS.contains(vspace::induced(m, inside))) sub_ok = false;

    // cross-check the sum's canonical basis against the dense echelon of
    // the raw images
    std::vector<vspace::Vector> images;
    for (const auto& v : S.basis()) images.push_back(m.apply(v));
    for (const auto& v : T.basis()) images.push_back(m.apply(v));
    auto lib = dense::canon(vspace::induced(m, S.sum(T)).basis(), cols);
    auto raw = dense::canon(images, cols);
    if (!(lib == raw)) cross_ok = false;
  }
  check_true(r, "c10.sum", "100 samples gf5", sum_ok);
  check_true(r, "c10.intersect", "100 samples gf5", meet_ok);
  check_true(r, "c10.contains", "100 samples gf5", sub_ok);
  check_true(r, "c10.dense-cross-check", "100 samples gf5", cross_ok);
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 11. Decoding through both lifts agrees with the direct decoder.

CriterionResult c11_pipeline_coherence(std::uint64_t) {
  CriterionResult r;
  auto scheme = ce::default_scheme_z();
  auto gf5 = vspace::Field::prime(5);
  for (const auto& set : sample_sets(200)) {
    perm::Window w(ce::window_covering_column0(scheme, set.horizon() + 2));
    bool gsl_ok = true, ba_ok = true;
    for (std::uint64_t n = 0; n < 32; ++n) {
      bool direct = ce::decode_membership(n, scheme, set, w).in();
      if (pipeline::decode_via_gsl(n, scheme, set, w, gf5) != direct)
        gsl_ok = false;
      if (pipeline::decode_via_ba(n, scheme, set, w) != direct) ba_ok = false;
    }
    check_true(r, "c11.gsl." + set.name(), "n<32", gsl_ok);
    check_true(r, "c11.ba." + set.name(), "n<32", ba_ok);
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// 12. Printed expressions re-parse to equal trees.

perm::AtomRegistry full_vocabulary() {
  auto reg = perm::base_registry();
  pi2::register_atoms(reg, pi2::default_scheme_2());
  pi2::register_b(reg, pi2::build_stages(pi2::default_scheme_2(),
                                         pi2::Pi2Predicate::never(), 64));
  ce::register_atoms(reg, ce::default_scheme_z(), ce::Enumerator::evens(16));
  return reg;
}

CriterionResult c12_grammar_round_trip(std::uint64_t seed) {
  CriterionResult r;
  Rng rng(seed);
  auto reg = full_vocabulary();
  bool ok = true;
  std::string first_failure;
  for (int i = 0; i < 500; ++i) {
    auto e = sampling::random_expr(rng, reg, 4);
    auto text = permlang::print(*e, reg);
    auto back = permlang::parse(text, reg);
    if (!perm::equal_trees(*e, *back)) {
      ok = false;
      if (first_failure.empty()) first_failure = text;
    }
  }
  check_true(r, "c12.round-trip", "500 expressions" +
             (first_failure.empty() ? "" : " first failure: " + first_failure), ok);
  finish(r);
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {"decode-exactness",
       "membership decode matches ground truth on three sample sets",
       c01_decode_exactness},
      {"parity-split",
       "exactly one commutator fires per witnessed stage, split by parity",
       c02_parity_split},
      {"transposition-words",
       "two-generator words realize every transposition below 32",
       c03_transposition_words},
      {"stage-bookkeeping",
       "stage counts match the direct formula, grow monotonically and double "
       "on the mirrored product",
       c04_stage_bookkeeping},
      {"horizon-classification",
       "horizon classification matches the built-in answers",
       c05_horizon_classification},
      {"interval-homomorphism",
       "induced interval maps compose and preserve the algebra",
       c06_interval_homomorphism},
      {"sup-discrimination",
       "supremum discrimination separates finite from certified-infinite "
       "swap sets",
       c07_sup_discrimination},
      {"difference-absorption",
       "finitary images keep differences inside the moved span; infinite "
       "ones escape every candidate",
       c08_difference_absorption},
      {"scalar-group-laws",
       "basis-permutation lifts form a group modulo scalars with exact "
       "semilinearity",
       c09_scalar_group_laws},
      {"lattice-preservation",
       "induced maps preserve the subspace lattice operations",
       c10_lattice_preservation},
      {"pipeline-coherence",
       "decoding through both lifts agrees with the direct decoder",
       c11_pipeline_coherence},
      {"grammar-round-trip", "printed expressions re-parse to equal trees",
       c12_grammar_round_trip},
  };
  return criteria;
}

report::Report run_acceptance(std::uint64_t seed) {
  report::Report rep("suite acceptance seed=" + std::to_string(seed));
  for (const auto& c : acceptance_criteria()) {
    auto result = c.run(seed);
    for (const auto& rec : result.records) rep.add(rec);
  }
  return rep;
}

report::Report run_properties(std::uint64_t seed) {
  report::Report rep("suite properties seed=" + std::to_string(seed));
  Rng rng(seed);

  {  // window group laws on closed expressions
    bool inv_ok = true, assoc_ok = true, conj_ok = true, comm_ok = true;
    perm::Window w(16);
    for (int i = 0; i < 50; ++i) {
      auto e = sampling::random_window_expr(rng, 16, 3);
      auto f = sampling::random_window_expr(rng, 16, 3);
      auto g = sampling::random_window_expr(rng, 16, 3);
      if (!perm::is_identity_on(*perm::prod({e, perm::inv(e)}), w)) inv_ok = false;
      auto left = perm::prod({perm::prod({e, f}), g});
      auto right = perm::prod({e, perm::prod({f, g})});
      if (perm::window_image(*left, w) != perm::window_image(*right, w))
        assoc_ok = false;
      auto expanded = perm::prod({perm::inv(f), e, f});
      if (perm::window_image(*perm::conj(e, f), w) !=
          perm::window_image(*expanded, w))
        conj_ok = false;
      auto comm_expanded =
          perm::prod({perm::inv(e), perm::inv(f), e, f});
      if (perm::window_image(*perm::comm(e, f), w) !=
          perm::window_image(*comm_expanded, w))
        comm_ok = false;
    }
    rep.check_true("prop.group.inverse", "50 closed expressions", inv_ok);
    rep.check_true("prop.group.associative", "50 closed expressions", assoc_ok);
    rep.check_true("prop.group.conj-expansion", "50 closed expressions", conj_ok);
    rep.check_true("prop.group.comm-expansion", "50 closed expressions", comm_ok);
  }

  {  // Boolean algebra laws on random normal forms
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
      auto x = sampling::random_belem(rng);
      auto y = sampling::random_belem(rng);
      auto z = sampling::random_belem(rng);
      using namespace intalg;
      if (!(join(x, y) == join(y, x))) ok = false;
      if (!(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)))) ok = false;
      if (!(complement(join(x, y)) == meet(complement(x), complement(y))))
        ok = false;
      if (!(complement(complement(x)) == x)) ok = false;
      if (!(BElem::from_intervals(x.parts()) == x)) ok = false;
    }
    rep.check_true("prop.boolean.laws", "100 samples", ok);
  }

  {  // randomized reruns of the seeded acceptance families
    auto sub = c06_interval_homomorphism(seed);
    for (auto rec : sub.records) {
      rec.name = "prop." + rec.name;
      rep.add(rec);
    }
    auto words = c12_grammar_round_trip(seed);
    for (auto rec : words.records) {
      rec.name = "prop." + rec.name;
      rep.add(rec);
    }
  }

  {  // lattice laws
    auto gf5 = vspace::Field::prime(5);
    bool ok = true;
    for (int i = 0; i < 30; ++i) {
      auto S = sampling::random_subspace(rng, gf5, 4, 10);
      auto T = sampling::random_subspace(rng, gf5, 4, 10);
      auto U = sampling::random_subspace(rng, gf5, 4, 10);
      if (!(S.sum(T) == T.sum(S))) ok = false;
      if (!(S.sum(S) == S)) ok = false;
      if (!(S.intersect(T) == T.intersect(S))) ok = false;
      if (!(S.sum(T).sum(U) == S.sum(T.sum(U)))) ok = false;
      if (!(S.intersect(S.sum(T)) == S)) ok = false;  // absorption
      if (!(S.sum(S.intersect(T)) == S)) ok = false;
    }
    rep.check_true("prop.lattice.laws", "30 samples gf5", ok);
  }

  return rep;
}

}  // namespace symlift::suites
