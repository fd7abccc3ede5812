#pragma once
// ============================================================================
// eval.hpp
//
// Direct evaluation of formulas on lassos; this is the reference oracle the
// automaton pipeline is checked against, so it follows the defining equations
// and nothing else.  On an ultimately periodic word a suffix's value depends
// only on its position class, which makes every supremum a maximum over one
// window of |u|+|v| offsets:
//
//   - plain and discounted until: a class seen again contributes no more than
//     its first occurrence (the later discount factor is smaller and the
//     prefix minimum only shrank), so the window maximum is exact;
//   - the tending variant converges to its limit z instead of 0, and the
//     terms may approach their supremum without attaining it.  The exact
//     value is max(window maximum, min(z, p)) where p is the prefix minimum
//     of the left-hand terms over the whole window.
//
// The window can be widened by an integer factor; widening never changes the
// result and the property tests exercise exactly that.
// ============================================================================

#include <vector>

#include "dltl/formula.hpp"
#include "dltl/lasso.hpp"

namespace dltl {

// Exact satisfaction value in [0,1].  Throws ModelError when a letter does
// not assign an atom the formula uses.
Rational eval_lasso(const FormulaFactory& factory, FormulaId id, const Lasso& lasso,
                    unsigned window_scale = 1);

// Truth of a Boolean formula (no discounting, no scaling) per position class.
// Plain atoms require Boolean weights; the weight probes accept any weights.
std::vector<bool> eval_bool_ltl_classes(const FormulaFactory& factory, FormulaId id,
                                        const Lasso& lasso);

// Truth at the first position.
bool eval_bool_ltl(const FormulaFactory& factory, FormulaId id, const Lasso& lasso);

}  // namespace dltl
