#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "symlift/report.hpp"
#include "symlift/suites.hpp"

using namespace symlift;

TEST_CASE("summary counts equal record tallies") {
  report::Report rep("demo");
  rep.check("b-check", "", "1", "1");
  rep.check("a-check", "", "1", "2");
  rep.check_true("c-check", "", true);
  CHECK(rep.total() == 3);
  CHECK(rep.passed() == 2);
  CHECK(rep.failed() == 1);
  CHECK_FALSE(rep.all_pass());
}

TEST_CASE("records sort by name in both formats") {
  report::Report rep("demo");
  rep.check("b", "", "x", "x");
  rep.check("a", "", "x", "x");
  auto text = rep.to_text(false);
  CHECK(text.find("[PASS] a") < text.find("[PASS] b"));
  auto machine = rep.to_text(true);
  CHECK(machine.find("name=a") < machine.find("name=b"));
  CHECK(machine.find("summary\ttotal=2\tpassed=2\tfailed=0") != std::string::npos);
}

TEST_CASE("machine format keeps the field order and strips separators") {
  report::Report rep("demo");
  rep.check("n", "a\tb", "x", "x");
  auto line = rep.to_text(true);
  CHECK(line.find("name=n\tpass=1\tinputs=a b\texpected=x\tgot=x") !=
        std::string::npos);
}

TEST_CASE("config files parse key=value lines") {
  std::string path = "report_test_config.txt";
  {
    std::ofstream out(path);
    out << "# comment\nwindow = 32\nset=primes25\nbad line\n";
  }
  auto kv = report::load_config_file(path);
  CHECK(kv.at("window") == "32");
  CHECK(kv.at("set") == "primes25");
  CHECK(kv.size() == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(report::load_config_file("no_such_file_here"),
                  std::invalid_argument);
}

TEST_CASE("property suite is deterministic given the seed") {
  auto a = suites::run_properties(7);
  auto b = suites::run_properties(7);
  CHECK(a.to_text(true) == b.to_text(true));
  CHECK(a.all_pass());

  auto c = suites::run_properties(8);
  CHECK(c.all_pass());
}
