#pragma once
// ============================================================================
// awa.hpp
//
// Alternating weak automata for threshold assertions.  build_awa compiles an
// assertion "value of phi cmp v" into an automaton over a finite letter
// alphabet whose language, restricted to lassos, is exactly the set of words
// whose value satisfies the assertion.
//
// States come in two kinds.  Threshold states carry a formula, a comparator
// and a rational threshold; discounted operators additionally carry a shift
// recording how far the discount has advanced.  Boolean states carry a plain
// Boolean formula and a polarity and follow the classic alternating-automaton
// expansion; they enter the picture at the threshold-zero boundary, where
// "value > 0" turns into the nonzero rewrite of the formula.
//
// Successor assertions whose truth is forced (a threshold at or past the
// reachable extreme) collapse to constants on the spot, so every stored state
// has a live transition function and thresholds stay inside [0,1].  The
// automaton is weak: its only cycles are self-loops, certified by a
// topological rank per state.
// ============================================================================

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dltl/formula.hpp"
#include "dltl/lasso.hpp"
#include "dltl/rational.hpp"

namespace dltl {

using StateId = std::uint32_t;

// Positive Boolean combination of states, stored as the antichain of its
// minimal models: a list of clauses (sorted sets of states), none containing
// another.  No clauses is false; one empty clause is true.  Keeping the
// antichain canonical makes the nondeterminization's model enumeration a
// plain read of the clause list.
class BoolPlus {
 public:
  static BoolPlus constant(bool value);
  static BoolPlus var(StateId state);

  bool is_false() const { return clauses_.empty(); }
  bool is_true() const { return clauses_.size() == 1 && clauses_[0].empty(); }

  // Each clause is one containment-minimal model.
  const std::vector<std::vector<StateId>>& minimal_models() const { return clauses_; }

  // "true", "false", "s0", "s0 & s2", "(s0 & s2) | s1".
  std::string to_text() const;

  bool operator==(const BoolPlus& o) const { return clauses_ == o.clauses_; }

  friend BoolPlus disjoin(const BoolPlus& a, const BoolPlus& b);
  friend BoolPlus conjoin(const BoolPlus& a, const BoolPlus& b);

 private:
  void normalize();

  std::vector<std::vector<StateId>> clauses_;
};

BoolPlus disjoin(const BoolPlus& a, const BoolPlus& b);
BoolPlus conjoin(const BoolPlus& a, const BoolPlus& b);

enum class Cmp : std::uint8_t { Greater, Less };

inline Cmp flip(Cmp c) { return c == Cmp::Greater ? Cmp::Less : Cmp::Greater; }
inline const char* cmp_text(Cmp c) { return c == Cmp::Greater ? ">" : "<"; }

enum class StateKind : std::uint8_t { Threshold, Boolean };

struct AwaState {
  StateKind kind = StateKind::Threshold;
  FormulaId formula = kNoFormula;
  // Threshold states only: how far the outermost discount has advanced.
  std::uint32_t shift = 0;
  Cmp cmp = Cmp::Greater;
  Rational threshold;
  // Boolean states only: evaluate the formula under negation.
  bool negated = false;

  bool operator==(const AwaState& o) const {
    return kind == o.kind && formula == o.formula && shift == o.shift && cmp == o.cmp &&
           threshold == o.threshold && negated == o.negated;
  }
};

struct AwaStateHash {
  std::size_t operator()(const AwaState& s) const;
};

// How successor states of discounted operators are represented.
enum class ExpansionPolicy : std::uint8_t {
  // Exponential discounts keep shift 0 and divide the threshold by the
  // factor; every other discount falls back to advancing the shift.
  FoldExponential,
  // Every discounted successor advances the shift, uniformly.
  ShiftAll,
};

struct Awa {
  std::vector<Letter> alphabet;                    // sorted, duplicate-free
  std::vector<AwaState> states;                    // index is the StateId
  std::vector<std::vector<BoolPlus>> transitions;  // [state][letter index]
  std::vector<bool> accepting;
  std::vector<std::uint32_t> ranks;  // every non-self edge strictly descends
  StateId initial = 0;

  // Index into alphabet; throws ModelError when the letter is unknown.
  std::size_t letter_index(const Letter& letter) const;
};

// Compiles the assertion "phi cmp threshold" over the given alphabet.
// threshold must lie in [0,1]; every alphabet letter must assign every atom
// of phi.  The factory may grow (Boolean rewrites intern new nodes).
Awa build_awa(FormulaFactory& factory, FormulaId formula, Cmp cmp, const Rational& threshold,
              std::vector<Letter> alphabet,
              ExpansionPolicy policy = ExpansionPolicy::FoldExponential);

// Transition lookup on a finished automaton.
const BoolPlus& delta(const Awa& awa, StateId state, const Letter& letter);

bool is_accepting_state(const Awa& awa, StateId state);

// Recomputes the rank witness from the transition structure; throws
// ModelError if any cycle other than a self-loop exists.
std::vector<std::uint32_t> check_weakness(const Awa& awa);

std::size_t threshold_state_count(const Awa& awa);

// "(p U q) < 1/2" or "boolean !(p U q)" style description of one state.
std::string state_to_text(const Awa& awa, const FormulaFactory& factory, StateId state);

// Deterministic text listing: header, alphabet, then one block per state with
// its per-letter transitions.  Byte-stable for equal inputs.
std::string dump_awa(const Awa& awa, const FormulaFactory& factory);

// Graphviz description of the state graph.
std::string dump_awa_dot(const Awa& awa, const FormulaFactory& factory);

}  // namespace dltl
