#pragma once
// ============================================================================
// nba.hpp
//
// Alternation removal.  The weak alternating automaton of awa.hpp becomes a
// nondeterministic Buechi automaton through the breakpoint construction: a
// state is a set of assertions to verify plus the subset still owing an
// accepting visit since the last breakpoint.  A letter move picks one minimal
// model per member transition; the union of the picks is the successor set.
//
// Assertion sets are kept minimal: an assertion implied by another member is
// redundant as a conjunct and is dropped, with its obligation inherited by
// the implying member.  Implication between assertions follows the threshold
// and shift monotonicity of the state semantics (see dominates below); the
// unpruned construction stays available for differential checks.
// ============================================================================

#include <cstdint>
#include <string>
#include <vector>

#include "dltl/awa.hpp"
#include "dltl/formula.hpp"
#include "dltl/lasso.hpp"

namespace dltl {

using NbaStateId = std::uint32_t;

struct AssertionSet {
  std::vector<StateId> members;  // sorted, unique
  bool minimal = false;

  bool operator==(const AssertionSet& o) const {
    return members == o.members && minimal == o.minimal;
  }
};

struct NbaState {
  AssertionSet set;
  AssertionSet obligations;  // subset of set, all non-accepting

  bool operator==(const NbaState& o) const {
    return set == o.set && obligations == o.obligations;
  }
};

struct Nba {
  std::vector<Letter> alphabet;  // same order as the source automaton
  std::vector<NbaState> states;
  // [state][letter index] -> sorted successor ids.
  std::vector<std::vector<std::vector<NbaStateId>>> transitions;
  std::vector<bool> accepting;  // obligations empty
  NbaStateId initial = 0;

  std::size_t letter_index(const Letter& letter) const;
};

// Whether acceptance from a1 implies acceptance from a2 on every word.
// True only for same-formula, same-comparator threshold pairs:
//   - a tighter threshold implies a looser one ((f<t1) implies (f<t2) when
//     t1<t2; (f>t1) implies (f>t2) when t1>t2);
//   - for discounted operators, a later shift implies an earlier one for >
//     and an earlier shift implies a later one for < (the coefficients only
//     shrink), provided the threshold sits above the tending limit, where
//     the per-position terms move monotonically.
bool dominates(const FormulaFactory& factory, const AwaState& a1, const AwaState& a2);

// Drops every member implied by another member; idempotent.
AssertionSet minimize_assertion_set(const FormulaFactory& factory, const Awa& awa,
                                    std::vector<StateId> members);

// Breakpoint construction.  With prune, every reachable set is minimal.
Nba awa_to_nba(const FormulaFactory& factory, const Awa& awa, bool prune = true);

// Does the word of the lasso belong to the language?  Product of the lasso's
// position-class graph with the automaton, searched for a reachable
// accepting cycle.
bool nba_membership(const Nba& nba, const Lasso& lasso);

// Deterministic text listing; member assertions are named by their sN ids in
// the source automaton's dump.
std::string dump_nba(const Nba& nba);

// Graphviz description of the state graph.
std::string dump_nba_dot(const Nba& nba);

}  // namespace dltl
