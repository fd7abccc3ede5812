#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "dltl/errors.hpp"
#include "dltl/kripke.hpp"

using namespace dltl;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(DLTL_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("loading a model reads atoms, states and transitions") {
  KripkeStructure k = load_kripke(read_fixture("two_branch.kripke"));
  CHECK(k.atoms == std::vector<std::string>{"a", "b"});
  REQUIRE(k.states.size() == 2);
  CHECK(k.states[0].name == "s0");
  CHECK(k.states[0].initial);
  CHECK(!k.states[1].initial);
  CHECK(k.states[0].successors == std::vector<std::uint32_t>{0, 1});
  CHECK(k.states[1].successors == std::vector<std::uint32_t>{1});
  CHECK(*k.states[1].label.weight("b") == Rational(1));
  CHECK(k.initial_states() == std::vector<std::uint32_t>{0});

  KripkeStructure w = load_kripke(read_fixture("weighted.kripke"));
  CHECK(*w.states[1].label.weight("p") == Rational(1, 2));
}

TEST_CASE("alphabet lists distinct labels in sorted order") {
  KripkeStructure k = load_kripke(
      "aps: p\n"
      "state: s0 init p=1\n"
      "state: s1 p=0\n"
      "state: s2 p=1\n"  // same label as s0
      "trans: s0 s1\ntrans: s1 s2\ntrans: s2 s0\n");
  std::vector<Letter> a = k.alphabet();
  REQUIRE(a.size() == 2);
  CHECK(a[0].to_text() == "p=0");
  CHECK(a[1].to_text() == "p=1");
}

TEST_CASE("model validation errors") {
  // Transitions referencing unknown states.
  CHECK_THROWS_AS(load_kripke("aps: p\nstate: s0 init p=1\ntrans: s0 s9\n"), ModelError);
  // State without a successor.
  CHECK_THROWS_AS(load_kripke("aps: p\nstate: s0 init p=1\n"), ModelError);
  // Missing initial state.
  CHECK_THROWS_AS(load_kripke("aps: p\nstate: s0 p=1\ntrans: s0 s0\n"), ModelError);
  // Missing weight for a declared atom.
  CHECK_THROWS_AS(load_kripke("aps: p q\nstate: s0 init p=1\ntrans: s0 s0\n"), ModelError);
  // Weight outside [0,1].
  CHECK_THROWS_AS(load_kripke("aps: p\nstate: s0 init p=7/2\ntrans: s0 s0\n"), ModelError);
  // Undeclared atom in a label.
  CHECK_THROWS_AS(load_kripke("aps: p\nstate: s0 init p=1 q=0\ntrans: s0 s0\n"), ParseError);
  // Duplicate state name.
  CHECK_THROWS_AS(
      load_kripke("aps: p\nstate: s0 init p=1\nstate: s0 p=0\ntrans: s0 s0\n"), ParseError);
  // Unknown directive.
  CHECK_THROWS_AS(load_kripke("nodes: s0\n"), ParseError);
  // Empty model.
  CHECK_THROWS_AS(load_kripke(""), ModelError);
}

TEST_CASE("comments and duplicate transitions are tolerated") {
  KripkeStructure k = load_kripke(
      "# header comment\n"
      "aps: p\n"
      "state: s0 init p=1  # inline comment\n"
      "trans: s0 s0\n"
      "trans: s0 s0\n");
  CHECK(k.states[0].successors == std::vector<std::uint32_t>{0});
}

TEST_CASE("lasso enumeration on the branching fixture") {
  KripkeStructure k = load_kripke(read_fixture("two_branch.kripke"));

  std::vector<Lasso> small = enumerate_lassos(k, 1, 1);
  std::set<std::string> texts;
  for (const Lasso& l : small) texts.insert(l.to_text());
  CHECK(texts == std::set<std::string>{"; a=1,b=0", "a=1,b=0 ; a=1,b=0", "a=1,b=0 ; a=0,b=1"});

  // Hand count for bounds (2,2): the a-loop in six presentations, the
  // one-step and two-step entries into the b-sink in four and two.
  std::vector<Lasso> larger = enumerate_lassos(k, 2, 2);
  CHECK(larger.size() == 12);
  for (const Lasso& l : larger) {
    CHECK(l.prefix.size() <= 2);
    CHECK(l.period.size() >= 1);
    CHECK(l.period.size() <= 2);
    CHECK(realizes(k, l));
  }

  // Enumeration output never repeats a letter sequence.
  std::set<std::string> unique;
  for (const Lasso& l : larger) CHECK(unique.insert(l.to_text()).second);
}

TEST_CASE("lasso enumeration on deterministic fixtures") {
  KripkeStructure single = load_kripke(read_fixture("single.kripke"));
  std::vector<Lasso> s = enumerate_lassos(single, 2, 2);
  // p^w presented as ;p, p;p, ;pp, p;pp, pp;p, pp;pp.
  CHECK(s.size() == 6);
  for (const Lasso& l : s) CHECK(realizes(single, l));

  KripkeStructure chain = load_kripke(read_fixture("chain.kripke"));
  std::vector<Lasso> c = enumerate_lassos(chain, 1, 1);
  REQUIRE(c.size() == 1);
  CHECK(c[0].to_text() == "a=1,b=0 ; a=0,b=1");
}

TEST_CASE("realizes matches label sequences against the state graph") {
  KripkeStructure k = load_kripke(read_fixture("two_branch.kripke"));
  CHECK(realizes(k, Lasso::parse("; a=1,b=0")));
  CHECK(realizes(k, Lasso::parse("a=1,b=0 a=1,b=0 ; a=0,b=1")));
  CHECK(realizes(k, Lasso::parse("a=1,b=0 ; a=0,b=1 a=0,b=1")));
  // The b-state is a sink: no return to the a-state.
  CHECK(!realizes(k, Lasso::parse("; a=1,b=0 a=0,b=1")));
  CHECK(!realizes(k, Lasso::parse("a=0,b=1 ; a=0,b=1")));  // not initial
  CHECK(!realizes(k, Lasso::parse("; a=1,b=1")));          // no such label

  KripkeStructure chain = load_kripke(read_fixture("chain.kripke"));
  CHECK(realizes(chain, Lasso::parse("a=1,b=0 ; a=0,b=1")));
  CHECK(!realizes(chain, Lasso::parse("; a=1,b=0")));  // cannot stay in s0
}

TEST_CASE("a lasso realizes the structure built from it") {
  for (const char* text : {"; p=1", "p=1 p=0 ; p=1 p=1", "p=1/2 ; p=1/4 p=1"}) {
    Lasso l = Lasso::parse(text);
    KripkeStructure k = kripke_from_lasso(l);
    CHECK(realizes(k, l));
    // The degenerate structure has exactly one computation: its enumeration
    // at matching bounds recovers a lasso describing the same word.
    std::vector<Lasso> back = enumerate_lassos(k, l.prefix.size(), l.period.size());
    bool found = false;
    for (const Lasso& b : back) found |= b == l;
    CHECK(found);
  }
  CHECK_THROWS_AS(kripke_from_lasso(Lasso::parse("p=1 ; q=1")), ModelError);
}
