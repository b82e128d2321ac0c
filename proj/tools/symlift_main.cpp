#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "symlift/coding_ce.hpp"
#include "symlift/coding_pi2.hpp"
#include "symlift/intalg.hpp"
#include "symlift/permlang.hpp"
#include "symlift/pipeline.hpp"
#include "symlift/report.hpp"
#include "symlift/suites.hpp"
#include "symlift/vspace.hpp"

namespace {

using namespace symlift;

struct Options {
  report::RunConfig rc;
  std::string config_path;
  std::string expr;
  std::string elem = "[0/1,1/1)";
  std::string target = "gsl";
  std::string suite_name = "acceptance";
  long long eval_point = -1;
  bool action_image = false;
  bool action_profile = false;
  bool action_classify = false;
};

// flag > config > default: anything not set on the command line picks up
// the config file value when one exists.
void apply_config(CLI::App* sub, const std::map<std::string, std::string>& kv,
                  Options& o) {
  auto take = [&](const char* flag, const char* key, auto& field) {
    auto it = kv.find(key);
    if (it == kv.end()) return;
    if (sub->count(flag) > 0) return;
    std::istringstream in(it->second);
    in >> field;
  };
  take("--window", "window", o.rc.window);
  take("--horizon", "horizon", o.rc.horizon);
  take("--stages", "stages", o.rc.stages);
  take("--threshold", "threshold", o.rc.threshold);
  take("--seed", "seed", o.rc.seed);
  take("--nmax", "nmax", o.rc.nmax);
  take("--set", "set", o.rc.set_name);
  take("--pred", "pred", o.rc.pred_name);
  take("--field", "field", o.rc.field_name);
  take("--out", "out", o.rc.out_path);
  if (kv.count("machine") && sub->count("--machine") == 0)
    o.rc.machine = kv.at("machine") == "1" || kv.at("machine") == "true";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--window", o.rc.window, "window bound (0 = automatic)");
  sub->add_option("--horizon", o.rc.horizon, "enumeration horizon");
  sub->add_option("--stages", o.rc.stages, "stage bound for constructions");
  sub->add_option("--threshold", o.rc.threshold, "evidence threshold");
  sub->add_option("--seed", o.rc.seed, "seed for randomized suites");
  sub->add_option("--nmax", o.rc.nmax, "decode n in [0, nmax)");
  sub->add_option("--set", o.rc.set_name, "enumerator: evens|empty|primes25|@file");
  sub->add_option("--pred", o.rc.pred_name,
                  "predicate: always|never|lt|even|table:<file>");
  sub->add_option("--field", o.rc.field_name, "field: q|gf<p>|gf4");
  sub->add_option("--out", o.rc.out_path, "write the report to this path");
  sub->add_option("--config", o.config_path, "key=value config file");
  sub->add_flag("--machine", o.rc.machine, "machine-readable report");
}

ce::Enumerator load_set(const Options& o) {
  if (!o.rc.set_name.empty() && o.rc.set_name.front() == '@')
    return ce::Enumerator::from_file(o.rc.set_name.substr(1));
  return ce::Enumerator::named(o.rc.set_name, o.rc.horizon);
}

// Atom bindings depend on which construction the command loads: a named
// set binds w, g0, g1, b to the enumeration coding; a predicate binds the
// stage-built b. Without either, the word generators and column swaps are
// available and b/g0/g1 are unknown atoms.
perm::AtomRegistry make_registry(const Options& o, bool with_set, bool with_pred) {
  auto reg = perm::base_registry();
  pi2::register_atoms(reg, pi2::default_scheme_2());
  if (with_pred) {
    auto pred = pi2::Pi2Predicate::named(o.rc.pred_name);
    pi2::register_b(reg, pi2::build_stages(pi2::default_scheme_2(), pred,
                                           o.rc.stages));
  }
  if (with_set)
    ce::register_atoms(reg, ce::default_scheme_z(), load_set(o));
  return reg;
}

int emit(const report::Report& rep, const Options& o) {
  std::string text = rep.to_text(o.rc.machine);
  if (!o.rc.out_path.empty()) {
    std::ofstream out(o.rc.out_path);
    if (!out) throw std::runtime_error("cannot write " + o.rc.out_path);
    out << text;
  } else {
    std::cout << text;
  }
  return rep.all_pass() ? 0 : 1;
}

int run_perm(CLI::App* sub, Options& o) {
  bool with_set = sub->count("--set") > 0;
  bool with_pred = sub->count("--pred") > 0;
  if (with_set && with_pred)
    throw CLI::ValidationError("--set and --pred both bind 'b'; pick one");
  auto reg = make_registry(o, with_set, with_pred);
  auto e = permlang::parse(o.expr, reg);
  std::uint64_t bound = o.rc.window == 0 ? 64 : o.rc.window;
  perm::Window w(bound);
  report::Report rep("perm --expr '" + o.expr + "'");

  if (o.eval_point >= 0) {
    auto x = static_cast<perm::Point>(o.eval_point);
    rep.add({"eval", "x=" + std::to_string(x), "",
             std::to_string(perm::eval(*e, x)), true});
  }
  if (o.action_image) {
    auto img = perm::window_image(*e, w);
    std::string s;
    for (auto [from, to] : img) {
      if (from != to) s += std::to_string(from) + ">" + std::to_string(to) + " ";
    }
    rep.add({"image", "window=" + std::to_string(bound), "",
             s.empty() ? "identity" : s, true});
  }
  if (o.action_profile) {
    auto profile = perm::cycle_profile(*e, w);
    std::string s;
    for (auto [len, count] : profile.counts)
      s += std::to_string(len) + ":" + std::to_string(count) + " ";
    s += "escapes:" + std::to_string(profile.escapes);
    rep.add({"profile", "window=" + std::to_string(bound), "", s, true});
  }
  if (o.action_classify) {
    auto v = perm::classify(*e, w, o.rc.threshold);
    std::string s = v.kind == perm::ClassVerdict::Kind::FinTwoCycles
                        ? "finitary with " + std::to_string(v.count) + " two-cycles"
                    : v.kind == perm::ClassVerdict::Kind::InfEvidence
                        ? "infinite evidence: " + std::to_string(v.count) +
                              " two-cycles at window " + std::to_string(v.window)
                        : "unknown";
    rep.add({"classify", "window=" + std::to_string(bound) + " threshold=" +
                             std::to_string(o.rc.threshold),
             "", s, true});
  }
  return emit(rep, o);
}

int run_code2(Options& o) {
  auto scheme = ce::default_scheme_z();
  auto set = load_set(o);
  std::uint64_t bound = o.rc.window != 0
                            ? o.rc.window
                            : ce::window_covering_column0(scheme, set.horizon() + 2);
  perm::Window w(bound);
  report::Report rep("code2 --set " + o.rc.set_name);
  for (std::uint64_t n = 0; n < o.rc.nmax; ++n) {
    auto verdict = ce::decode_membership(n, scheme, set, w);
    std::string got = verdict.in()
                          ? "in(stage " + std::to_string(verdict.stage) + ")"
                          : "not-by-horizon(" + std::to_string(verdict.stage) + ")";
    auto truth = set.ground_truth(n);
    if (truth) {
      rep.add({"decode.n" + std::to_string(n), "window=" + std::to_string(bound),
               *truth ? "in" : "not", verdict.in() ? "in" : "not",
               *truth == verdict.in()});
    } else {
      rep.add({"decode.n" + std::to_string(n), "window=" + std::to_string(bound),
               "", got, true});
    }
  }
  return emit(rep, o);
}

int run_code3(Options& o) {
  auto pred = pi2::Pi2Predicate::named(o.rc.pred_name);
  report::Report rep("code3 --pred " + o.rc.pred_name);
  for (std::uint64_t n = 0; n < o.rc.nmax; ++n) {
    auto count = pi2::two_cycle_count(n, pred, o.rc.stages);
    auto verdict = pi2::decode_at_horizon(n, pred, o.rc.stages, o.rc.threshold);
    std::string got =
        verdict.kind == perm::ClassVerdict::Kind::FinTwoCycles
            ? "finite(" + std::to_string(verdict.count) + ")"
        : verdict.kind == perm::ClassVerdict::Kind::InfEvidence
            ? "infinite-evidence(" + std::to_string(verdict.count) + ")"
            : "unknown";
    auto truth = pred.truth_class(n);
    std::string inputs = "stages=" + std::to_string(o.rc.stages) +
                         " count=" + std::to_string(count);
    if (truth) {
      bool got_in = verdict.kind == perm::ClassVerdict::Kind::InfEvidence;
      bool got_out = verdict.kind == perm::ClassVerdict::Kind::FinTwoCycles;
      rep.add({"classify.n" + std::to_string(n), inputs,
               *truth ? "in" : "not",
               got_in ? "in" : got_out ? "not" : "unknown",
               *truth ? got_in : got_out});
    } else {
      rep.add({"classify.n" + std::to_string(n), inputs, "", got, true});
    }
  }
  return emit(rep, o);
}

int run_gsl(CLI::App* sub, Options& o) {
  bool with_set = sub->count("--set") > 0;
  bool with_pred = sub->count("--pred") > 0;
  auto reg = make_registry(o, with_set, with_pred);
  auto e = permlang::parse(o.expr, reg);
  auto field = vspace::Field::parse(o.rc.field_name);
  auto lifted = vspace::delta_embed(field, e);
  std::uint64_t bound = o.rc.window == 0 ? 64 : o.rc.window;
  report::Report rep("gsl --expr '" + o.expr + "'");
  rep.add({"nsim-identity", "window=" + std::to_string(bound), "",
           vspace::nsim_identity(lifted.rep(), perm::Window(bound)) ? "true"
                                                                    : "false",
           true});
  for (std::size_t i = 0; i < 4; ++i)
    rep.add({"basis-image.e" + std::to_string(i), "", "",
             lifted.rep().apply_basis(i).serialize(), true});
  return emit(rep, o);
}

int run_ba(CLI::App* sub, Options& o) {
  bool with_set = sub->count("--set") > 0;
  bool with_pred = sub->count("--pred") > 0;
  auto reg = make_registry(o, with_set, with_pred);
  auto e = permlang::parse(o.expr, reg);
  auto x = intalg::BElem::parse(o.elem);
  std::uint64_t bound = o.rc.window == 0 ? 64 : o.rc.window;
  report::Report rep("ba --expr '" + o.expr + "'");
  rep.add({"image", "elem=" + o.elem, "", intalg::apply_H(e, x).str(), true});

  // the discriminators need support evidence
  try {
    intalg::PhiClass cls = perm::finitary_closure(*e)
                               ? intalg::PhiClass::finitary(*perm::finitary_closure(*e))
                               : intalg::PhiClass::certified_infinite(e);
    auto region = intalg::moved_region(cls, perm::Window(bound));
    rep.add({"moved-region", "window=" + std::to_string(bound),
             "", region.region.str() + (region.partial ? " (partial)" : ""), true});
    auto psi = intalg::psi_check(cls, perm::Window(bound));
    rep.add({"psi", "window=" + std::to_string(bound), "",
             psi.kind == intalg::PsiVerdict::Kind::SupExists
                 ? "sup-exists: " + psi.sup.str()
                 : "no-sup-evidence",
             true});
  } catch (const std::invalid_argument& err) {
    rep.add({"psi", "", "", std::string("unavailable: ") + err.what(), true});
  }
  return emit(rep, o);
}

int run_pipeline(Options& o) {
  auto scheme = ce::default_scheme_z();
  auto set = load_set(o);
  std::uint64_t bound = o.rc.window != 0
                            ? o.rc.window
                            : ce::window_covering_column0(scheme, set.horizon() + 2);
  perm::Window w(bound);
  auto field = vspace::Field::parse(o.rc.field_name);
  report::Report rep("pipeline --set " + o.rc.set_name + " --target " + o.target);
  for (std::uint64_t n = 0; n < o.rc.nmax; ++n) {
    bool direct = ce::decode_membership(n, scheme, set, w).in();
    bool lifted = o.target == "gsl"
                      ? pipeline::decode_via_gsl(n, scheme, set, w, field)
                      : pipeline::decode_via_ba(n, scheme, set, w);
    rep.add({"pipeline.n" + std::to_string(n), "target=" + o.target,
             direct ? "in" : "not", lifted ? "in" : "not", direct == lifted});
  }
  return emit(rep, o);
}

int run_suite(Options& o) {
  if (o.suite_name == "acceptance")
    return emit(suites::run_acceptance(o.rc.seed), o);
  if (o.suite_name == "properties")
    return emit(suites::run_properties(o.rc.seed), o);
  throw CLI::ValidationError("unknown suite: " + o.suite_name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symlift: explicit permutations of omega coding enumerable and "
      "limit-definable sets, with decoders through semilinear and "
      "interval-algebra lifts"};
  app.require_subcommand(1);
  Options o;

  auto* cmd_perm = app.add_subcommand("perm", "evaluate and analyze expressions");
  cmd_perm->add_option("--expr", o.expr, "expression text")->required();
  cmd_perm->add_option("--eval", o.eval_point, "evaluate at a point");
  cmd_perm->add_flag("--image", o.action_image, "window image table");
  cmd_perm->add_flag("--profile", o.action_profile, "window cycle profile");
  cmd_perm->add_flag("--classify", o.action_classify, "two-cycle classification");
  add_common(cmd_perm, o);

  auto* cmd_code2 = app.add_subcommand("code2", "decode an enumerated set");
  add_common(cmd_code2, o);

  auto* cmd_code3 = app.add_subcommand("code3", "stage-construction decoding");
  add_common(cmd_code3, o);

  auto* cmd_gsl = app.add_subcommand("gsl", "lift an expression to a semilinear map");
  cmd_gsl->add_option("--expr", o.expr, "expression text")->required();
  add_common(cmd_gsl, o);

  auto* cmd_ba = app.add_subcommand("ba", "lift an expression to the interval algebra");
  cmd_ba->add_option("--expr", o.expr, "expression text")->required();
  cmd_ba->add_option("--elem", o.elem, "interval element, e.g. \"[0/1,1/1)\"");
  add_common(cmd_ba, o);

  auto* cmd_pipe = app.add_subcommand("pipeline", "decode through a lift");
  cmd_pipe->add_option("--target", o.target, "gsl|ba")
      ->check(CLI::IsMember({"gsl", "ba"}));
  add_common(cmd_pipe, o);

  auto* cmd_suite = app.add_subcommand("suite", "run a check suite");
  cmd_suite->add_option("name", o.suite_name, "acceptance|properties");
  add_common(cmd_suite, o);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!o.config_path.empty())
      apply_config(active, report::load_config_file(o.config_path), o);
    if (active == cmd_perm) return run_perm(cmd_perm, o);
    if (active == cmd_code2) return run_code2(o);
    if (active == cmd_code3) return run_code3(o);
    if (active == cmd_gsl) return run_gsl(cmd_gsl, o);
    if (active == cmd_ba) return run_ba(cmd_ba, o);
    if (active == cmd_pipe) return run_pipeline(o);
    if (active == cmd_suite) return run_suite(o);
  } catch (const CLI::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const permlang::ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const perm::StageBudgetError& err) {
    std::cerr << "budget error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
