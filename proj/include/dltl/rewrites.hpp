#pragma once
// ============================================================================
// rewrites.hpp
//
// Extreme-value rewrites.  For a formula phi over weighted letters, two
// Boolean formulas of linear size characterize the extreme satisfaction
// values on lassos:
//
//   nonzero(phi): holds  iff  the value of phi is > 0
//   not_one(phi): holds  iff  the value of phi is < 1
//
// (On arbitrary computations the forward directions still hold: a nonzero
// value implies nonzero(phi), a value below one implies not_one(phi).)
// Atoms turn into the weight probes "weight > 0" / "weight = 1", so the
// outputs are Boolean formulas even when the input reads weighted letters.
//
// The automaton construction leans on these for the threshold-zero boundary,
// where "value > 0" is not expressible by the numeric transitions alone.
// ============================================================================

#include <unordered_map>

#include "dltl/formula.hpp"

namespace dltl {

struct ExtremePair {
  FormulaId nonzero = kNoFormula;
  FormulaId not_one = kNoFormula;
};

class RewriteCache {
 public:
  std::unordered_map<FormulaId, ExtremePair> entries;
};

// Both rewrites at once (they are mutually recursive through negation).
// Results are memoized per node in the cache.
ExtremePair extreme_rewrites(FormulaFactory& factory, FormulaId id, RewriteCache& cache);

}  // namespace dltl
