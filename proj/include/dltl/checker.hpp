#pragma once
// ============================================================================
// checker.hpp
//
// Decision procedures on top of the automaton pipeline.
//
//   check_at_least    does every computation of the structure satisfy the
//                     formula with value >= v?  Reduction: compile the
//                     negation against threshold 1-v, intersect with the
//                     structure, test emptiness.  A non-empty intersection
//                     yields a concrete counterexample computation.
//   satisfiable_above is there any computation with value > v?
//   approximate_value brackets the structure's value within epsilon by
//                     binary search over check_at_least.
//
// Every witness lasso that leaves this module has been re-evaluated by the
// exact oracle first; a witness that fails re-evaluation raises
// ConsistencyError instead of being returned (that would be a checker bug,
// never an input problem).
// ============================================================================

#include <optional>
#include <string>
#include <vector>

#include "dltl/formula.hpp"
#include "dltl/kripke.hpp"
#include "dltl/lasso.hpp"
#include "dltl/nba.hpp"
#include "dltl/rational.hpp"

namespace dltl {

struct CheckVerdict {
  bool holds = false;
  // Set when the check is violated: a computation of the structure whose
  // value under the checked formula is strictly below the threshold.
  std::optional<Lasso> counterexample;
  Rational counterexample_value;
};

struct ValueInterval {
  Rational lo;  // check_at_least holds here
  Rational hi;  // fails here, or 1
};

// All 2^n Boolean letters over the given atoms, in canonical order.
std::vector<Letter> boolean_alphabet(std::vector<std::string> atoms);

// Emptiness with witness extraction via iterative nested depth-first search:
// none iff the language is empty, otherwise a lasso the automaton accepts.
std::optional<Lasso> find_accepting_lasso(const Nba& nba);

// Decides "every computation of k satisfies phi with value >= v".
CheckVerdict check_at_least(FormulaFactory& factory, const KripkeStructure& k, FormulaId phi,
                            const Rational& v);

// A lasso whose value under phi is strictly above v, if one exists over the
// given alphabet.
std::optional<Lasso> satisfiable_above(FormulaFactory& factory, FormulaId phi, const Rational& v,
                                       std::vector<Letter> alphabet);

// Brackets the structure's satisfaction value: lo <= value <= hi with
// hi - lo <= epsilon, epsilon > 0.
ValueInterval approximate_value(FormulaFactory& factory, const KripkeStructure& k, FormulaId phi,
                                const Rational& epsilon);

}  // namespace dltl
