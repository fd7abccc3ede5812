#pragma once
// ============================================================================
// parser.hpp
//
// Text form of formulas.  Binding strength, loosest to tightest:
//
//   |   &   U-family (right associative)   unary (! X F G scale)
//
// so "p U q | r" is "(p U q) | r" and "a & b U c" is "a & (b U c)".
// F, G and their discounted variants are sugar and expand during parsing:
//
//   F a -> true U a        G a -> !(true U !a)
//   F{f} a -> true U{f} a  G{f} a -> !(true U{f} !a)
//
// Discount syntax: exp(c) with c strictly between 0 and 1, or recip.
// Rationals are "a" or "a/b" over plain digits.  '#' starts a line comment.
// The weight probes "p>0" and "p=1" parse as leaves, so canonical text of
// rewritten formulas round-trips too.
// ============================================================================

#include <string_view>

#include "dltl/formula.hpp"

namespace dltl {

// Throws ParseError (with 1-based line/column) on malformed input or
// out-of-range constants.
FormulaId parse_formula(FormulaFactory& factory, std::string_view text);

}  // namespace dltl
