// Release gate for the whole pipeline.  Each criterion below prints exactly
// one PASS/FAIL line; the process exits nonzero when any criterion fails.
// Counts, grids, and time budgets are fixed here on purpose: loosening them
// is a visible diff, not a flag.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dltl/awa.hpp"
#include "dltl/checker.hpp"
#include "dltl/errors.hpp"
#include "dltl/eval.hpp"
#include "dltl/generator.hpp"
#include "dltl/kripke.hpp"
#include "dltl/nba.hpp"
#include "dltl/parser.hpp"
#include "dltl/rewrites.hpp"

using namespace dltl;

namespace {

// Witness bookkeeping shared across criteria; the last criterion audits it.
struct WitnessAudit {
  long verified = 0;
  long failed = 0;
  long consistency_errors = 0;
};
WitnessAudit g_audit;

struct Criterion {
  std::string name;
  double budget_seconds = 0;  // zero means untimed
  std::function<bool(std::string&)> run;
};

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(DLTL_FIXTURE_DIR) + "/" + name);
  if (!in) throw ModelError("missing fixture " + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Letter> two_atom_alphabet() { return boolean_alphabet({"p", "q"}); }

// ---------------------------------------------------------------------------
// Automaton membership vs direct evaluation, exact arithmetic throughout.
// ---------------------------------------------------------------------------
bool membership_matches_oracle(std::string& detail) {
  const long kInstances = 5000;
  long mismatches = 0;
  FormulaFactory factory;
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance inst = random_instance(factory, static_cast<std::uint64_t>(seed));
    bool expected = eval_lasso(factory, inst.formula, inst.lasso) > inst.threshold;
    Awa awa =
        build_awa(factory, inst.formula, Cmp::Greater, inst.threshold, two_atom_alphabet());
    Nba nba = awa_to_nba(factory, awa);
    if (nba_membership(nba, inst.lasso) != expected) {
      ++mismatches;
      if (mismatches == 1) detail = "first mismatch at seed " + std::to_string(seed);
    }
  }
  if (mismatches > 0) {
    detail += " (" + std::to_string(mismatches) + " of " + std::to_string(kInstances) + ")";
    return false;
  }
  detail = std::to_string(kInstances) + " instances";
  return true;
}

// ---------------------------------------------------------------------------
// The positivity / below-one rewrites against direct evaluation.
// ---------------------------------------------------------------------------
bool rewrites_match_oracle(std::string& detail) {
  const long kInstances = 2000;
  FormulaFactory factory;
  RewriteCache cache;
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance inst = random_instance(factory, 10000 + static_cast<std::uint64_t>(seed));
    Rational value = eval_lasso(factory, inst.formula, inst.lasso);
    ExtremePair pair = extreme_rewrites(factory, inst.formula, cache);
    bool pos_ok = eval_bool_ltl(factory, pair.nonzero, inst.lasso) == (value > Rational(0));
    bool one_ok = eval_bool_ltl(factory, pair.not_one, inst.lasso) == (value < Rational(1));
    if (!pos_ok || !one_ok) {
      detail = "mismatch at seed " + std::to_string(seed) + " on " +
               factory.to_text(inst.formula);
      return false;
    }
  }
  detail = std::to_string(kInstances) + " instances";
  return true;
}

// ---------------------------------------------------------------------------
// Domination pruning: same language on sampled lassos, never more states.
// ---------------------------------------------------------------------------
bool pruning_is_sound(std::string& detail) {
  const long kInstances = 1000;
  FormulaFactory factory;
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance inst = random_instance(factory, 20000 + static_cast<std::uint64_t>(seed));
    Awa awa =
        build_awa(factory, inst.formula, Cmp::Greater, inst.threshold, two_atom_alphabet());
    Nba pruned = awa_to_nba(factory, awa, true);
    Nba unpruned = awa_to_nba(factory, awa, false);
    if (pruned.states.size() > unpruned.states.size()) {
      detail = "pruning grew the automaton at seed " + std::to_string(seed);
      return false;
    }
    if (nba_membership(pruned, inst.lasso) != nba_membership(unpruned, inst.lasso)) {
      detail = "membership diverged at seed " + std::to_string(seed);
      return false;
    }
  }
  detail = std::to_string(kInstances) + " instances";
  return true;
}

// ---------------------------------------------------------------------------
// Chain length for an exponentially discounted eventuality at v = 2^-k is
// exactly k: the thresholds double step by step until they leave [0,1).
// ---------------------------------------------------------------------------
bool chain_tracks_threshold_bits(std::string& detail) {
  FormulaFactory factory;
  FormulaId ev = parse_formula(factory, "F{exp(1/2)} p");
  for (unsigned k = 1; k <= 12; ++k) {
    Rational v = Rational(1, 2).pow(k);
    Awa awa = build_awa(factory, ev, Cmp::Greater, v, boolean_alphabet({"p"}));

    std::vector<Rational> expected;  // v, 2v, 4v, ... below 1
    for (Rational t = v; t < Rational(1); t = t * Rational(2)) expected.push_back(t);

    std::vector<Rational> got;
    for (const AwaState& s : awa.states) {
      if (s.kind != StateKind::Threshold) continue;
      if (s.shift != 0) {
        detail = "unexpected shift at k=" + std::to_string(k);
        return false;
      }
      got.push_back(s.threshold);
    }
    std::sort(got.begin(), got.end());
    if (got != expected || got.size() != k) {
      detail = "chain at k=" + std::to_string(k) + " has " + std::to_string(got.size()) +
               " states, expected " + std::to_string(k);
      return false;
    }
  }
  detail = "k = 1..12";
  return true;
}

// ---------------------------------------------------------------------------
// End-to-end checking on the fixtures, cross-checked by exhaustive
// enumeration of short computations.
// ---------------------------------------------------------------------------
bool fixtures_check_end_to_end(std::string& detail) {
  FormulaFactory factory;
  KripkeStructure branch = load_kripke(read_fixture("two_branch.kripke"));
  FormulaId ev = parse_formula(factory, "F{exp(1/2)} b");
  std::vector<Lasso> enumerated = enumerate_lassos(branch, 4, 4);

  for (long num = 1; num <= 16; ++num) {
    Rational v(num, 16);
    CheckVerdict verdict = check_at_least(factory, branch, ev, v);
    if (verdict.holds) {
      detail = "expected a violation at " + v.str();
      return false;
    }
    Rational value = eval_lasso(factory, ev, *verdict.counterexample);
    if (!realizes(branch, *verdict.counterexample) || !(value < v)) {
      ++g_audit.failed;
      detail = "counterexample failed re-verification at " + v.str();
      return false;
    }
    ++g_audit.verified;
    // The enumeration must exhibit a violation on its own.
    bool enumerated_violation = false;
    for (const Lasso& l : enumerated) {
      if (eval_lasso(factory, ev, l) < v) enumerated_violation = true;
    }
    if (!enumerated_violation) {
      detail = "enumeration found no violation at " + v.str();
      return false;
    }
  }

  KripkeStructure chain = load_kripke(read_fixture("chain.kripke"));
  ValueInterval interval = approximate_value(factory, chain, ev, Rational(1, 32));
  Rational exact(1, 2);  // the unique computation reaches b at step one
  for (const Lasso& l : enumerate_lassos(chain, 4, 4)) {
    if (eval_lasso(factory, ev, l) != exact) {
      detail = "enumerated chain computation off the expected value";
      return false;
    }
  }
  if (!(interval.lo <= exact) || !(exact <= interval.hi) ||
      interval.hi - interval.lo > Rational(1, 32)) {
    detail = "interval [" + interval.lo.str() + ", " + interval.hi.str() + "] misses " +
             exact.str();
    return false;
  }
  detail = "16 grid points and the interval [" + interval.lo.str() + ", " + interval.hi.str() +
           "]";
  return true;
}

// ---------------------------------------------------------------------------
// Operator identities: scaling multiplies the value exactly; tending toward
// zero is the discounted until, in value and in automaton membership.
// ---------------------------------------------------------------------------
bool operator_identities_hold(std::string& detail) {
  const long kInstances = 1000;
  FormulaFactory factory;
  const Rational factors[3] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance inst = random_instance(factory, 30000 + static_cast<std::uint64_t>(seed));
    const Rational& c = factors[seed % 3];
    FormulaId scaled = factory.make_scale(c, inst.formula);
    if (eval_lasso(factory, scaled, inst.lasso) != c * eval_lasso(factory, inst.formula, inst.lasso)) {
      detail = "scaling broke linearity at seed " + std::to_string(seed);
      return false;
    }
  }
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance left = random_instance(factory, 40000 + 2 * static_cast<std::uint64_t>(seed));
    GeneratedInstance right =
        random_instance(factory, 40001 + 2 * static_cast<std::uint64_t>(seed));
    DiscountFunction d = (seed % 2 == 0) ? exponential(Rational(1, 2)) : reciprocal();
    FormulaId tend = factory.make_tend(left.formula, d, Rational(0), right.formula);
    FormulaId until = factory.make_disc_until(left.formula, d, right.formula);
    if (eval_lasso(factory, tend, left.lasso) != eval_lasso(factory, until, left.lasso)) {
      detail = "values diverged at seed " + std::to_string(seed);
      return false;
    }
    Awa tend_awa = build_awa(factory, tend, Cmp::Greater, left.threshold, two_atom_alphabet());
    Awa until_awa = build_awa(factory, until, Cmp::Greater, left.threshold, two_atom_alphabet());
    if (nba_membership(awa_to_nba(factory, tend_awa), left.lasso) !=
        nba_membership(awa_to_nba(factory, until_awa), left.lasso)) {
      detail = "membership diverged at seed " + std::to_string(seed);
      return false;
    }
  }
  detail = std::to_string(kInstances) + " instances per identity";
  return true;
}

// ---------------------------------------------------------------------------
// The folded expansion for exponential discounts accepts exactly the same
// lassos as the uniform shifting expansion.
// ---------------------------------------------------------------------------
bool expansions_agree(std::string& detail) {
  const long kInstances = 1000;
  FormulaFactory factory;
  for (long seed = 1; seed <= kInstances; ++seed) {
    GeneratedInstance inst = random_instance(factory, 50000 + static_cast<std::uint64_t>(seed));
    Awa folded = build_awa(factory, inst.formula, Cmp::Greater, inst.threshold,
                           two_atom_alphabet(), ExpansionPolicy::FoldExponential);
    Awa shifted = build_awa(factory, inst.formula, Cmp::Greater, inst.threshold,
                            two_atom_alphabet(), ExpansionPolicy::ShiftAll);
    if (nba_membership(awa_to_nba(factory, folded), inst.lasso) !=
        nba_membership(awa_to_nba(factory, shifted), inst.lasso)) {
      detail = "policies diverged at seed " + std::to_string(seed);
      return false;
    }
  }
  detail = std::to_string(kInstances) + " instances";
  return true;
}

// ---------------------------------------------------------------------------
// Every witness any procedure hands out must survive exact re-verification;
// no consistency failure may surface anywhere in this run.
// ---------------------------------------------------------------------------
bool witnesses_all_reverify(std::string& detail) {
  FormulaFactory factory;
  for (long seed = 1; seed <= 200; ++seed) {
    GeneratedInstance inst = random_instance(factory, 60000 + static_cast<std::uint64_t>(seed));
    std::optional<Lasso> witness =
        satisfiable_above(factory, inst.formula, inst.threshold, two_atom_alphabet());
    if (!witness) continue;
    if (eval_lasso(factory, inst.formula, *witness) > inst.threshold) {
      ++g_audit.verified;
    } else {
      ++g_audit.failed;
    }
  }
  detail = std::to_string(g_audit.verified) + " witnesses re-verified, " +
           std::to_string(g_audit.failed) + " failed, " +
           std::to_string(g_audit.consistency_errors) + " consistency errors";
  return g_audit.failed == 0 && g_audit.consistency_errors == 0 && g_audit.verified >= 50;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"automaton membership equals direct evaluation on random instances", 120,
       membership_matches_oracle},
      {"positivity and below-one rewrites match direct evaluation", 0, rewrites_match_oracle},
      {"domination pruning preserves membership and never adds states", 0, pruning_is_sound},
      {"discounted eventuality chain length equals the threshold bit count", 1,
       chain_tracks_threshold_bits},
      {"fixture checking agrees with exhaustive enumeration", 10, fixtures_check_end_to_end},
      {"scaling is linear and zero-limit tending equals discounted until", 0,
       operator_identities_hold},
      {"folded and shifted expansions accept the same lassos", 0, expansions_agree},
      {"all emitted witnesses survive exact re-verification", 0, witnesses_all_reverify},
  };

  int failures = 0;
  for (Criterion& criterion : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const ConsistencyError& e) {
      ++g_audit.consistency_errors;
      detail = std::string("consistency failure: ") + e.what();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      ok = false;
      detail = "over time budget of " + std::to_string(criterion.budget_seconds) + "s";
    }
    std::printf("%s: %s (%.1fs%s%s)\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), seconds,
                detail.empty() ? "" : "; ", detail.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
