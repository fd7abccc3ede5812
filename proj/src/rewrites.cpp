#include "dltl/rewrites.hpp"

#include "dltl/errors.hpp"

namespace dltl {

ExtremePair extreme_rewrites(FormulaFactory& f, FormulaId id, RewriteCache& cache) {
  auto it = cache.entries.find(id);
  if (it != cache.entries.end()) return it->second;

  // Copy what the node holds before recursing: children may grow the factory
  // and invalidate node references.
  const FormulaNode node = f.node(id);
  ExtremePair out;
  switch (node.kind) {
    case FormulaKind::True:
      out = {f.make_true(), f.make_false()};
      break;
    case FormulaKind::False:
      out = {f.make_false(), f.make_true()};
      break;
    case FormulaKind::Atom:
      out = {f.make_atom_positive(node.atom), f.make_not(f.make_atom_one(node.atom))};
      break;
    case FormulaKind::AtomPositive:
    case FormulaKind::AtomOne:
      // Already Boolean-valued probes: nonzero is the probe itself.
      out = {id, f.make_not(id)};
      break;
    case FormulaKind::Not: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      out = {a.not_one, a.nonzero};
      break;
    }
    case FormulaKind::Or: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      ExtremePair b = extreme_rewrites(f, node.child[1], cache);
      out = {f.make_or(a.nonzero, b.nonzero), f.make_and(a.not_one, b.not_one)};
      break;
    }
    case FormulaKind::And: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      ExtremePair b = extreme_rewrites(f, node.child[1], cache);
      out = {f.make_and(a.nonzero, b.nonzero), f.make_or(a.not_one, b.not_one)};
      break;
    }
    case FormulaKind::Next: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      out = {f.make_next(a.nonzero), f.make_next(a.not_one)};
      break;
    }
    case FormulaKind::Until: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      ExtremePair b = extreme_rewrites(f, node.child[1], cache);
      out.nonzero = f.make_until(a.nonzero, b.nonzero);
      // The value is 1 exactly when full-valued right is reached through
      // full-valued left; not_one is the negation of that until.
      out.not_one =
          f.make_not(f.make_until(f.make_not(a.not_one), f.make_not(b.not_one)));
      break;
    }
    case FormulaKind::DiscUntil: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      ExtremePair b = extreme_rewrites(f, node.child[1], cache);
      out.nonzero = f.make_until(a.nonzero, b.nonzero);
      // Every term beyond the first carries a discount factor below one, so
      // only the very first position can achieve value 1, and only when the
      // discount starts at exactly 1.
      if (eval_discount(*node.disc, 0) < 1) {
        out.not_one = f.make_true();
      } else {
        out.not_one = b.not_one;
      }
      break;
    }
    case FormulaKind::Scale: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      // The factor is strictly below one, so the scaled value never reaches 1.
      out = {a.nonzero, f.make_true()};
      break;
    }
    case FormulaKind::Tend: {
      ExtremePair a = extreme_rewrites(f, node.child[0], cache);
      ExtremePair b = extreme_rewrites(f, node.child[1], cache);
      const Rational& z = node.constant;
      const Rational first = eval_discount(*node.disc, 0);
      if (z.is_zero()) {
        // Tending to zero coincides with the discounted until.
        out.nonzero = f.make_until(a.nonzero, b.nonzero);
      } else if (first < 1) {
        // Every term blends in (1-eta(i))z > 0 from the first position on.
        out.nonzero = f.make_true();
      } else {
        // eta(0)=1: the first position contributes no blend, so the value is
        // positive exactly when either operand is positive right now.
        out.nonzero = f.make_or(a.nonzero, b.nonzero);
      }
      if (z.is_one()) {
        // Terms climb towards 1 whenever the left operand stays full-valued,
        // so the value is 1 when full right is reached through full left or
        // when full left never ends.
        FormulaId reach = f.make_until(f.make_not(a.not_one), f.make_not(b.not_one));
        FormulaId forever = f.make_not(f.make_until(f.make_true(), a.not_one));
        out.not_one = f.make_not(f.make_or(reach, forever));
      } else if (first < 1) {
        out.not_one = f.make_true();
      } else {
        out.not_one = b.not_one;
      }
      break;
    }
  }
  cache.entries.emplace(id, out);
  return out;
}

}  // namespace dltl
