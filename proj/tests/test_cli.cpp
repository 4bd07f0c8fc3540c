#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks against the built binary: exit codes, output tokens,
// byte determinism.
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  std::string command =
      std::string(CRN_CLI) + " " + args + " > " + out_path + " 2> " + err_path;
  int status = std::system(command.c_str());

  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::string data(const std::string& name) { return std::string(CRN_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the network statistics") {
  RunResult r = run("analyze " + data("baccam.crn"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n=7"));
  CHECK(contains(r.out, "l=2"));
  CHECK(contains(r.out, "s=4"));
  CHECK(contains(r.out, "deficiency=1"));
  CHECK(contains(r.out, "weakly_reversible=false"));

  RunResult table1 = run("analyze " + data("table1.crn"));
  CHECK(contains(table1.out, "deficiency=1"));
  RunResult rev = run("analyze " + data("revpair.crn"));
  CHECK(contains(rev.out, "reversible=true"));
}

TEST_CASE("identical invocations give byte-identical output") {
  for (const std::string& args :
       {"analyze " + data("baccam.crn"),
        "decompose " + data("example8.crn") + " --count --enumerate",
        "zero-analysis " + data("table1.crn") + " --format json"}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("decompose counts and enumerates") {
  RunResult ind = run("decompose " + data("example8.crn") + " --kind independent --count");
  CHECK(ind.exit_code == 0);
  CHECK(contains(ind.out, "number of independent decompositions: 5"));

  RunResult inc = run("decompose " + data("example8.crn") + " --kind incidence --count");
  CHECK(inc.exit_code == 0);
  CHECK(contains(inc.out, "number of incidence_independent decompositions: 52"));

  RunResult two = run("decompose " + data("twostep.crn") + " --kind incidence");
  CHECK(two.exit_code == 0);
  CHECK(contains(two.out, "part 1: {1}"));
  CHECK(contains(two.out, "part 2: {2}"));

  RunResult capped =
      run("decompose " + data("example8.crn") + " --enumerate --max 2 --format json");
  CHECK(capped.exit_code == 0);
  auto j = nlohmann::json::parse(capped.out);
  CHECK(j["result"]["enumeration"].size() == 2);
  CHECK(j["result"]["enumeration_truncated"].get<bool>());
}

TEST_CASE("check classifies a partition") {
  RunResult r = run("check " + data("baccam.crn") + " --parts \"1,2,3;4,5\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "bi_independent: true"));

  RunResult not_ind = run("check " + data("example2.crn") + " --parts \"1,3;2,4\"");
  CHECK(not_ind.exit_code == 0);
  CHECK(contains(not_ind.out, "independent: false"));

  RunResult trivial = run("check " + data("example2.crn") + " --parts \"1,2,3,4\"");
  CHECK(trivial.exit_code == 0);
  CHECK(contains(trivial.out, "independent: true"));
}

TEST_CASE("zero-analysis reports forced-zero species") {
  RunResult r = run("zero-analysis " + data("table1.crn") + " --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "zero-analysis");
  std::set<std::string> zero;
  for (const auto& name : j["result"]["zero_species"]) zero.insert(name.get<std::string>());
  CHECK(zero == std::set<std::string>{"A", "B"});

  RunResult target = run("zero-analysis " + data("targetcell.crn"));
  CHECK(target.exit_code == 0);
  CHECK(contains(target.out, "zero species: {V, I}"));
  CHECK(contains(target.out, "a positive steady state (all species positive) is not possible"));

  RunResult quiet = run("zero-analysis " + data("revpair.crn"));
  CHECK(quiet.exit_code == 0);
  CHECK(contains(quiet.out, "no species is forced to zero"));
}

TEST_CASE("equilibrium verifies a point") {
  std::string base = "equilibrium " + data("example2.crn");
  RunResult ok = run(base + " --point \"A=2,B=1,C=2\" --parts \"1,2;3,4\"");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "whole network at equilibrium: true"));
  CHECK(contains(ok.out, "part 1: {R1, R2}  at equilibrium: true"));
  CHECK(contains(ok.out, "part 2: {R3, R4}  at equilibrium: true"));

  RunResult off = run(base + " --point \"A=1,B=1,C=1\"");
  CHECK(off.exit_code == 0);
  CHECK(contains(off.out, "whole network at equilibrium: false"));

  RunResult origin = run(base + " --point \"A=0,B=0,C=0\"");
  CHECK(origin.exit_code == 0);
  CHECK(contains(origin.out, "whole network at equilibrium: true"));
}

TEST_CASE("exit codes") {
  CHECK(run("analyze /nonexistent/file.crn").exit_code == 2);

  std::ofstream bad("cli_bad_input.tmp");
  bad << "A -> A\n";
  bad.close();
  CHECK(run("analyze cli_bad_input.tmp").exit_code == 2);
  std::remove("cli_bad_input.tmp");

  CHECK(run("check " + data("baccam.crn") + " --parts \"1,2;3\"").exit_code == 3);
  CHECK(run("check " + data("baccam.crn") + " --parts \"1,2,3,4,5,9\"").exit_code == 3);
  CHECK(run("equilibrium " + data("baccam.crn") + " --point \"T=1,V=1,I1=1,I2=1\"").exit_code ==
        4);
  CHECK(run("equilibrium " + data("example2.crn") + " --point \"A=2,B=1\"").exit_code == 3);
  CHECK(run("equilibrium " + data("example2.crn") + " --point \"A=2,B=1,C=x\"").exit_code == 3);
}

TEST_CASE("json output carries the stable schema") {
  RunResult r = run("analyze " + data("baccam.crn") + " --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("command"));
  CHECK(j.contains("network"));
  CHECK(j.contains("result"));
  CHECK(j["result"]["n"] == 7);
  CHECK(j["result"]["sl"] == 7);
  CHECK(j["result"]["t"] == 3);
}
