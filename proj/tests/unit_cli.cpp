#include <doctest.h>

#include <sstream>

#include "redchev/cli.hpp"

using namespace redchev;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("alphas subcommand") {
  CliResult r = run({"alphas", "--field", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n3\n");

  CliResult r17 = run({"alphas", "--field", "17"});
  CHECK(r17.code == 0);
  size_t lines = 0;
  for (char c : r17.out) lines += c == '\n';
  CHECK(lines == 8);  // floor(17/2)

  CliResult r4 = run({"alphas", "--field", "2^2"});
  CHECK(r4.out == "0,1\n1,1\n");
}

TEST_CASE("redei subcommand") {
  CliResult coeffs =
      run({"redei", "--field", "5", "--alpha", "2", "--n", "2", "--coeffs"});
  CHECK(coeffs.code == 0);
  CHECK(coeffs.out == "num: 1,0,3 / den: 0,1\n");  // (x^2+2)/(2x) normalized

  CliResult eval =
      run({"redei", "--field", "5", "--alpha", "2", "--n", "2", "--eval",
           "0"});
  CHECK(eval.code == 0);
  CHECK(eval.out == "inf\n");

  CliResult at_inf =
      run({"redei", "--field", "5", "--alpha", "2", "--n", "3", "--eval",
           "inf"});
  CHECK(at_inf.code == 0);
  CHECK(at_inf.out == "inf\n");
}

TEST_CASE("cheby subcommand") {
  CliResult coeffs =
      run({"cheby", "--field", "5", "--alpha", "2", "--n", "2", "--coeffs"});
  CHECK(coeffs.code == 0);
  CHECK(coeffs.out == "num: 0,1 / den: 3,0,1\n");  // 2x/(2x^2+1) normalized

  CliResult inv =
      run({"cheby", "--field", "7", "--alpha", "3", "--n", "3",
           "--involution"});
  CHECK(inv.code == 0);
  CHECK(inv.out == "true\n");

  CliResult perm =
      run({"cheby", "--field", "5", "--alpha", "2", "--n", "5",
           "--permutes"});
  CHECK(perm.out == "true\n");
  CliResult noperm =
      run({"cheby", "--field", "5", "--alpha", "2", "--n", "2",
           "--permutes"});
  CHECK(noperm.out == "false\n");

  CliResult eval =
      run({"cheby", "--field", "5", "--alpha", "2", "--n", "2", "--eval",
           "1"});
  CHECK(eval.out == "4\n");
}

TEST_CASE("combine subcommand") {
  CliResult redei = run({"combine", "--field", "5", "--alpha", "2", "--u",
                         "1", "--v", "1", "--redei"});
  CHECK(redei.code == 0);
  CHECK(redei.out == "4\n");

  CliResult cheby = run({"combine", "--field", "5", "--alpha", "2", "--u",
                         "1", "--v", "1", "--cheby"});
  CHECK(cheby.out == "4\n");

  CliResult ident = run({"combine", "--field", "5", "--alpha", "2", "--u",
                         "3", "--v", "inf", "--redei"});
  CHECK(ident.out == "3\n");
}

TEST_CASE("graph subcommand") {
  CliResult cycles = run({"graph", "--field", "5", "--alpha", "2", "--n",
                          "2", "--map", "power", "--format", "cycles"});
  CHECK(cycles.code == 0);
  CHECK(cycles.out == "cycles: 1x1, 2x1; tails: 1x3\n");

  // isomorphic by construction, and the stats text is label-free
  CliResult redei_cycles = run({"graph", "--field", "5", "--alpha", "2",
                                "--n", "2", "--map", "redei"});
  CHECK(redei_cycles.out == cycles.out);

  CliResult dot = run({"graph", "--field", "5", "--alpha", "2", "--n", "2",
                       "--map", "cheby", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph functional_graph {", 0) == 0);
}

TEST_CASE("trig subcommand prints the F_4 table") {
  CliResult r = run({"trig", "--field", "2", "--alpha", "1", "--table"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0 0,0 1,0 0,0\n"
        "1 1,0 1,0 1,0\n"
        "2 1,0 0,0 inf\n");

  // explicit zeta: omega^2 has the same order
  CliResult rz = run({"trig", "--field", "2", "--alpha", "1", "--zeta",
                      "1,1", "--table"});
  CHECK(rz.code == 0);
  size_t lines = 0;
  for (char c : rz.out) lines += c == '\n';
  CHECK(lines == 3);

  // odd q works through the odd-q definitions
  CliResult rodd = run({"trig", "--field", "5", "--alpha", "2", "--table"});
  CHECK(rodd.code == 0);
  CHECK(rodd.out.substr(0, 12) == "0 0,0 1,0 0,");
}

TEST_CASE("keyx demo is deterministic and agrees") {
  std::vector<std::string> cmd = {"keyx",     "demo", "--field", "7",
                                  "--alpha",  "3",    "--x0",    "1",
                                  "--seed-a", "11",   "--seed-b", "22"};
  CliResult a = run(cmd);
  CliResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("A public: KEYX1 7 3 1 ") != std::string::npos);
  CHECK(a.out.find("agree: true\n") != std::string::npos);
}

TEST_CASE("selftest --quick passes every criterion") {
  CliResult r = run({"selftest", "--quick"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("12/12 checks passed\n") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"alphas"}).code == 1);  // missing --field
  CHECK(run({"redei", "--field", "5", "--alpha", "2", "--n", "2"}).code ==
        1);  // neither --coeffs nor --eval
  CHECK(run({"redei", "--field", "5", "--alpha", "2", "--n", "2",
             "--coeffs", "--eval", "1"})
            .code == 1);
  CHECK(run({"combine", "--field", "5", "--alpha", "2", "--u", "1", "--v",
             "1", "--redei", "--cheby"})
            .code == 1);
  CHECK(run({"trig", "--field", "2", "--alpha", "1"}).code == 1);
  CHECK(run({"graph", "--field", "5", "--alpha", "2", "--n", "2", "--map",
             "bogus"})
            .code == 1);

  // domain errors: exit 2 and the offending flag in the message
  CliResult bad_field = run({"alphas", "--field", "6"});
  CHECK(bad_field.code == 2);
  CHECK(bad_field.err.find("--field") != std::string::npos);

  CliResult bad_alpha =
      run({"redei", "--field", "5", "--alpha", "4", "--n", "2", "--coeffs"});
  CHECK(bad_alpha.code == 2);
  CHECK(bad_alpha.err.find("--alpha") != std::string::npos);

  CliResult bad_point =
      run({"redei", "--field", "5", "--alpha", "2", "--n", "2", "--eval",
           "7"});
  CHECK(bad_point.code == 2);
  CHECK(bad_point.err.find("--eval") != std::string::npos);

  CliResult bad_zeta = run({"trig", "--field", "2", "--alpha", "1",
                            "--zeta", "0,0", "--table"});
  CHECK(bad_zeta.code == 2);
  CHECK(bad_zeta.err.find("--zeta") != std::string::npos);

  CliResult bad_n = run({"redei", "--field", "5", "--alpha", "2", "--n",
                         "0", "--coeffs"});
  CHECK(bad_n.code == 2);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("help text lists the subcommands") {
  CliResult r = run({"--help"});
  for (const char* name :
       {"alphas", "redei", "cheby", "combine", "graph", "trig", "keyx",
        "selftest"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
}
