#pragma once
// ============================================================================
// generator.hpp
//
// Seeded random instances for the differential test suites: a formula, a
// lasso over the same atoms with Boolean letters, and a threshold from the
// 1/16 grid.  The draw sequence is fixed, so equal seeds give equal
// instances on every run.
// ============================================================================

#include <cstdint>

#include "dltl/formula.hpp"
#include "dltl/lasso.hpp"

namespace dltl {

struct GeneratorLimits {
  unsigned max_depth = 4;
  unsigned atom_count = 2;     // atoms p, q, r, s in order
  std::size_t max_prefix = 4;
  std::size_t max_period = 4;
};

struct GeneratedInstance {
  FormulaId formula = kNoFormula;
  Lasso lasso;
  Rational threshold;
};

// Draws over | & ! X U, discounted until with exp(1/4), exp(1/2), exp(3/4)
// and recip, scale with the same factor grid, and the tend operator with
// limits 0 and 1/2.
GeneratedInstance random_instance(FormulaFactory& factory, std::uint64_t seed,
                                  const GeneratorLimits& limits = {});

}  // namespace dltl
