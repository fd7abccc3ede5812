#pragma once
// ============================================================================
// discount.hpp
//
// Discounting functions: strictly decreasing maps from step counts into (0,1]
// that tend to zero.  Two base families are supported,
//
//   exponential(l) : i -> l^i          with l in (0,1)
//   reciprocal()   : i -> 1/(i+1)
//
// plus shifted variants f^{+k} : i -> f(i+k).  Shifts compose additively, so
// a function is represented flat as (family, factor, shift); nested shifts
// normalize by accumulation and a shift of zero is the identity.
// ============================================================================

#include <cstdint>
#include <string>

#include "dltl/rational.hpp"

namespace dltl {

struct DiscountFunction {
  enum class Family : std::uint8_t { Exponential, Reciprocal };

  Family family = Family::Exponential;
  Rational factor;       // base in (0,1); meaningful for Exponential only
  std::uint32_t shift = 0;

  bool operator==(const DiscountFunction& o) const {
    return family == o.family && shift == o.shift &&
           (family != Family::Exponential || factor == o.factor);
  }
  bool operator!=(const DiscountFunction& o) const { return !(*this == o); }
};

// Constructors validate the factor range and reject out-of-range bases.
DiscountFunction exponential(const Rational& factor);
DiscountFunction reciprocal();

// f^{+k}; shifting by zero returns the argument unchanged.
DiscountFunction shift_discount(const DiscountFunction& f, std::uint32_t k);

// Exact value f(i).
Rational eval_discount(const DiscountFunction& f, std::uint64_t i);

// Least i with f(i) < t.  Exists for every t > 0 because f tends to zero;
// throws ModelError for t <= 0.
std::uint64_t index_below(const DiscountFunction& f, const Rational& t);

// "exp(1/2)", "recip", with a "+k" suffix for shifted variants.  Shifted
// functions only occur inside automaton states, so the suffix shows up in
// dumps but never in parseable formula text.
std::string discount_to_text(const DiscountFunction& f);

std::size_t discount_hash(const DiscountFunction& f);

}  // namespace dltl
