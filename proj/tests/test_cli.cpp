#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "dltl/lasso.hpp"
#include "dltl/rational.hpp"

// End-to-end tests: drive the installed command line binary through a shell
// and verify text output, exit codes, and that printed witnesses re-verify.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(DLTL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[512];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string quoted(const std::string& arg) { return "'" + arg + "'"; }

std::string fixture(const std::string& name) {
  return std::string(DLTL_FIXTURE_DIR) + "/" + name;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

// Extracts the remainder of the unique line starting with the given prefix.
std::string field(const std::string& text, const std::string& prefix) {
  for (const std::string& line : lines_of(text)) {
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  }
  FAIL("missing line with prefix '" << prefix << "' in:\n" << text);
  return "";
}

}  // namespace

TEST_CASE("cli eval prints the exact value") {
  RunResult r = run_cli("eval 'a=1 a=1 a=1 ; a=0' 'a U{exp(1/2)} !a'");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/8\n");

  CHECK(run_cli("eval '; p=1/2' 'p>0'").output == "1\n");
  CHECK(run_cli("eval 'p=1 ; p=0' 'G p'").output == "0\n");
}

TEST_CASE("cli check prints a verdict and exit code") {
  RunResult holds = run_cli("check " + quoted(fixture("single.kripke")) + " 'G p' 1");
  CHECK(holds.exit_code == 0);
  CHECK(holds.output == "HOLDS\n");

  RunResult violated =
      run_cli("check " + quoted(fixture("two_branch.kripke")) + " 'F{exp(1/2)} b' 1/2");
  CHECK(violated.exit_code == 1);
  CHECK(lines_of(violated.output).at(0) == "VIOLATED");

  // The printed counterexample must re-evaluate to the printed value, below
  // the threshold, when fed back through eval.
  std::string cex = field(violated.output, "counterexample: ");
  std::string value = field(violated.output, "value: ");
  dltl::Lasso::parse(cex);  // well-formed
  auto parsed = dltl::Rational::parse(value);
  REQUIRE(parsed.has_value());
  CHECK(*parsed < dltl::Rational(1, 2));
  RunResult echo = run_cli("eval " + quoted(cex) + " 'F{exp(1/2)} b'");
  CHECK(echo.output == value + "\n");
}

TEST_CASE("cli sat reports witnesses and unsatisfiability") {
  RunResult sat = run_cli("sat 'F{exp(1/2)} p' 1/4");
  CHECK(sat.exit_code == 0);
  CHECK(lines_of(sat.output).at(0) == "SAT");
  std::string witness = field(sat.output, "witness: ");
  std::string value = field(sat.output, "value: ");
  CHECK(*dltl::Rational::parse(value) > dltl::Rational(1, 4));
  RunResult echo = run_cli("eval " + quoted(witness) + " 'F{exp(1/2)} p'");
  CHECK(echo.output == value + "\n");

  RunResult unsat = run_cli("sat 'p & !p' 0");
  CHECK(unsat.exit_code == 1);
  CHECK(unsat.output == "UNSAT\n");

  // Extra alphabet atoms widen the letters of the witness.
  RunResult extra = run_cli("sat 'p' 0 --atoms q");
  CHECK(extra.exit_code == 0);
  CHECK(field(extra.output, "witness: ").find("q=") != std::string::npos);
}

TEST_CASE("cli translate dumps automata deterministically") {
  RunResult awa = run_cli("translate 'F{exp(1/2)} p' 1/4");
  CHECK(awa.exit_code == 0);
  CHECK(awa.output.find("awa states=2") == 0);
  CHECK(awa.output.find("nba") == std::string::npos);
  CHECK(run_cli("translate 'F{exp(1/2)} p' 1/4").output == awa.output);

  RunResult both = run_cli("translate 'F{exp(1/2)} p' 1/4 --nba");
  CHECK(both.output.find("awa states=2") == 0);
  CHECK(both.output.find("nba states=") != std::string::npos);

  RunResult graph = run_cli("translate 'p U q' 1/2 --graph");
  CHECK(graph.output.find("digraph") != std::string::npos);
}

TEST_CASE("cli value brackets the model value") {
  RunResult r =
      run_cli("value " + quoted(fixture("chain.kripke")) + " 'F{exp(1/2)} b' 1/32");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "[1/2, 17/32]\n");

  RunResult one = run_cli("value " + quoted(fixture("single.kripke")) + " 'p' 1/8");
  CHECK(one.output == "[1, 1]\n");
}

TEST_CASE("cli reads formulas from files with an at prefix") {
  std::string path = "/tmp/dltl_cli_formula.txt";
  {
    std::ofstream out(path);
    out << "G p\n";
  }
  RunResult r = run_cli("check " + quoted(fixture("single.kripke")) + " @" + path + " 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "HOLDS\n");
  std::remove(path.c_str());
}

TEST_CASE("cli rejects malformed input with exit code two") {
  CHECK(run_cli("check " + quoted(fixture("single.kripke")) + " 'p' 'x/y'").exit_code == 2);
  RunResult bad_formula = run_cli("eval '; p=1' 'p U'");
  CHECK(bad_formula.exit_code == 2);
  CHECK(bad_formula.output.find("parse error") != std::string::npos);
  CHECK(run_cli("check").exit_code == 2);
  CHECK(run_cli("frobnicate 'p' 1").exit_code == 2);
  CHECK(run_cli("check /nonexistent.kripke 'p' 1").exit_code == 2);
  CHECK(run_cli("value " + quoted(fixture("single.kripke")) + " 'p' 0").exit_code == 2);
}
