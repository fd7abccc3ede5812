#pragma once
// ============================================================================
// formula.hpp
//
// Formula representation for linear temporal logic with discounting.  Nodes
// are interned in a factory: structurally equal subtrees share one id, so id
// equality is structural equality and every memo table in the checker can key
// on ids.  Construction is append-only; nodes are immutable once made.
//
// Surface connectives: true, false, atoms, !, |, &, X, U (plain until),
// U{f} (discounted until), scale{c} (multiply the value by c in (0,1)) and
// O{f,z} (discounted until tending to the limit z instead of to 0).
// F and G sugar is expanded by the parser and never appears as a node.
//
// Two extra leaf kinds, AtomPositive and AtomOne, probe weighted letters:
// "the weight of p is nonzero" and "the weight of p is exactly one".  They
// are produced by the extreme-value rewrites, where qualitative claims about
// a quantitative formula reduce to Boolean reasoning over those probes; on
// Boolean letters both coincide with the atom itself.
// ============================================================================

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dltl/discount.hpp"
#include "dltl/rational.hpp"

namespace dltl {

using FormulaId = std::uint32_t;
inline constexpr FormulaId kNoFormula = 0xFFFFFFFFu;

enum class FormulaKind : std::uint8_t {
  True,
  False,
  Atom,
  AtomPositive,  // weight(p) > 0
  AtomOne,       // weight(p) = 1
  Not,
  Or,
  And,
  Next,
  Until,
  DiscUntil,  // left U{f} right
  Scale,      // scale{factor} child
  Tend,       // left O{f,limit} right
};

struct FormulaNode {
  FormulaKind kind = FormulaKind::True;
  std::string atom;                       // Atom / AtomPositive / AtomOne
  FormulaId child[2] = {kNoFormula, kNoFormula};
  std::optional<DiscountFunction> disc;   // DiscUntil / Tend
  Rational constant;                      // Scale factor; Tend limit

  bool operator==(const FormulaNode& o) const {
    return kind == o.kind && atom == o.atom && child[0] == o.child[0] &&
           child[1] == o.child[1] && disc == o.disc && constant == o.constant;
  }
};

struct FormulaNodeHash {
  std::size_t operator()(const FormulaNode& n) const;
};

class FormulaFactory {
 public:
  FormulaId make_true();
  FormulaId make_false();
  FormulaId make_atom(const std::string& name);
  FormulaId make_atom_positive(const std::string& name);
  FormulaId make_atom_one(const std::string& name);
  FormulaId make_not(FormulaId a);
  FormulaId make_or(FormulaId a, FormulaId b);
  FormulaId make_and(FormulaId a, FormulaId b);
  FormulaId make_next(FormulaId a);
  FormulaId make_until(FormulaId a, FormulaId b);
  FormulaId make_disc_until(FormulaId a, const DiscountFunction& f, FormulaId b);
  // factor must lie strictly between 0 and 1.
  FormulaId make_scale(const Rational& factor, FormulaId a);
  // limit must lie in [0,1].
  FormulaId make_tend(FormulaId a, const DiscountFunction& f, const Rational& limit, FormulaId b);

  const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }

  // Subformula count with multiplicity (the size of the unshared syntax tree).
  std::uint64_t tree_size(FormulaId id) const;

  // Sorted unique atom names referenced anywhere below id, probes included.
  std::vector<std::string> atoms(FormulaId id) const;

  // Sorted unique exponential discount factors appearing below id.
  std::vector<Rational> discount_factors(FormulaId id) const;

  bool contains_kind(FormulaId id, FormulaKind kind) const;

  // Parseable canonical text; parsing it back yields the identical id.
  std::string to_text(FormulaId id) const;

 private:
  FormulaId intern(FormulaNode&& node);

  std::vector<FormulaNode> nodes_;
  std::unordered_map<FormulaNode, FormulaId, FormulaNodeHash> index_;
  mutable std::unordered_map<FormulaId, std::uint64_t> tree_size_cache_;
};

}  // namespace dltl
