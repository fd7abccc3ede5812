#include "dltl/formula.hpp"

#include <algorithm>
#include <set>

#include "dltl/errors.hpp"

namespace dltl {

std::size_t FormulaNodeHash::operator()(const FormulaNode& n) const {
  std::size_t h = static_cast<std::size_t>(n.kind);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  mix(std::hash<std::string>{}(n.atom));
  mix(n.child[0]);
  mix(n.child[1]);
  if (n.disc) mix(discount_hash(*n.disc));
  mix(n.constant.hash());
  return h;
}

FormulaId FormulaFactory::intern(FormulaNode&& node) {
  auto it = index_.find(node);
  if (it != index_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(nodes_.size());
  index_.emplace(node, id);
  nodes_.push_back(std::move(node));
  return id;
}

FormulaId FormulaFactory::make_true() {
  FormulaNode n;
  n.kind = FormulaKind::True;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_false() {
  FormulaNode n;
  n.kind = FormulaKind::False;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_atom(const std::string& name) {
  FormulaNode n;
  n.kind = FormulaKind::Atom;
  n.atom = name;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_atom_positive(const std::string& name) {
  FormulaNode n;
  n.kind = FormulaKind::AtomPositive;
  n.atom = name;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_atom_one(const std::string& name) {
  FormulaNode n;
  n.kind = FormulaKind::AtomOne;
  n.atom = name;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_not(FormulaId a) {
  FormulaNode n;
  n.kind = FormulaKind::Not;
  n.child[0] = a;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_or(FormulaId a, FormulaId b) {
  FormulaNode n;
  n.kind = FormulaKind::Or;
  n.child[0] = a;
  n.child[1] = b;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_and(FormulaId a, FormulaId b) {
  FormulaNode n;
  n.kind = FormulaKind::And;
  n.child[0] = a;
  n.child[1] = b;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_next(FormulaId a) {
  FormulaNode n;
  n.kind = FormulaKind::Next;
  n.child[0] = a;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_until(FormulaId a, FormulaId b) {
  FormulaNode n;
  n.kind = FormulaKind::Until;
  n.child[0] = a;
  n.child[1] = b;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_disc_until(FormulaId a, const DiscountFunction& f, FormulaId b) {
  FormulaNode n;
  n.kind = FormulaKind::DiscUntil;
  n.child[0] = a;
  n.child[1] = b;
  n.disc = f;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_scale(const Rational& factor, FormulaId a) {
  if (!(factor > 0) || !(factor < 1)) {
    throw ModelError("scale factor must lie strictly between 0 and 1, got " + factor.str());
  }
  FormulaNode n;
  n.kind = FormulaKind::Scale;
  n.child[0] = a;
  n.constant = factor;
  return intern(std::move(n));
}

FormulaId FormulaFactory::make_tend(FormulaId a, const DiscountFunction& f, const Rational& limit,
                                    FormulaId b) {
  if (!limit.in_unit_interval()) {
    throw ModelError("tend limit must lie in [0,1], got " + limit.str());
  }
  FormulaNode n;
  n.kind = FormulaKind::Tend;
  n.child[0] = a;
  n.child[1] = b;
  n.disc = f;
  n.constant = limit;
  return intern(std::move(n));
}

std::uint64_t FormulaFactory::tree_size(FormulaId id) const {
  auto it = tree_size_cache_.find(id);
  if (it != tree_size_cache_.end()) return it->second;
  const FormulaNode& n = nodes_[id];
  std::uint64_t total = 1;
  for (FormulaId c : n.child) {
    if (c != kNoFormula) total += tree_size(c);
  }
  tree_size_cache_.emplace(id, total);
  return total;
}

namespace {

template <typename Visit>
void walk(const FormulaFactory& f, FormulaId id, std::set<FormulaId>& seen, Visit&& visit) {
  if (!seen.insert(id).second) return;
  visit(f.node(id));
  for (FormulaId c : f.node(id).child) {
    if (c != kNoFormula) walk(f, c, seen, visit);
  }
}

}  // namespace

std::vector<std::string> FormulaFactory::atoms(FormulaId id) const {
  std::set<std::string> names;
  std::set<FormulaId> seen;
  walk(*this, id, seen, [&](const FormulaNode& n) {
    if (n.kind == FormulaKind::Atom || n.kind == FormulaKind::AtomPositive ||
        n.kind == FormulaKind::AtomOne) {
      names.insert(n.atom);
    }
  });
  return {names.begin(), names.end()};
}

std::vector<Rational> FormulaFactory::discount_factors(FormulaId id) const {
  std::set<FormulaId> seen;
  std::vector<Rational> out;
  walk(*this, id, seen, [&](const FormulaNode& n) {
    if (n.disc && n.disc->family == DiscountFunction::Family::Exponential) {
      out.push_back(n.disc->factor);
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FormulaFactory::contains_kind(FormulaId id, FormulaKind kind) const {
  std::set<FormulaId> seen;
  bool found = false;
  walk(*this, id, seen, [&](const FormulaNode& n) { found = found || n.kind == kind; });
  return found;
}

namespace {

// Binding strength, loosest to tightest; matches the grammar.
enum Level : int { kOr = 0, kAnd = 1, kUntil = 2, kUnary = 3 };

void print(const FormulaFactory& f, FormulaId id, int context, std::string& out) {
  const FormulaNode& n = f.node(id);
  auto wrap = [&](int level, auto&& body) {
    bool parens = level < context;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (n.kind) {
    case FormulaKind::True:
      out += "true";
      break;
    case FormulaKind::False:
      out += "false";
      break;
    case FormulaKind::Atom:
      out += n.atom;
      break;
    case FormulaKind::AtomPositive:
      out += n.atom + ">0";
      break;
    case FormulaKind::AtomOne:
      out += n.atom + "=1";
      break;
    case FormulaKind::Not:
      out += '!';
      print(f, n.child[0], kUnary, out);
      break;
    case FormulaKind::Next:
      out += "X ";
      print(f, n.child[0], kUnary, out);
      break;
    case FormulaKind::Scale:
      out += "scale{" + n.constant.str() + "} ";
      print(f, n.child[0], kUnary, out);
      break;
    case FormulaKind::Or:
      wrap(kOr, [&] {
        print(f, n.child[0], kOr, out);
        out += " | ";
        print(f, n.child[1], kOr + 1, out);
      });
      break;
    case FormulaKind::And:
      wrap(kAnd, [&] {
        print(f, n.child[0], kAnd, out);
        out += " & ";
        print(f, n.child[1], kAnd + 1, out);
      });
      break;
    case FormulaKind::Until:
      wrap(kUntil, [&] {
        print(f, n.child[0], kUntil + 1, out);
        out += " U ";
        print(f, n.child[1], kUntil, out);  // right-associative
      });
      break;
    case FormulaKind::DiscUntil:
      wrap(kUntil, [&] {
        print(f, n.child[0], kUntil + 1, out);
        out += " U{" + discount_to_text(*n.disc) + "} ";
        print(f, n.child[1], kUntil, out);
      });
      break;
    case FormulaKind::Tend:
      wrap(kUntil, [&] {
        print(f, n.child[0], kUntil + 1, out);
        out += " O{" + discount_to_text(*n.disc) + "," + n.constant.str() + "} ";
        print(f, n.child[1], kUntil, out);
      });
      break;
  }
}

}  // namespace

std::string FormulaFactory::to_text(FormulaId id) const {
  std::string out;
  print(*this, id, kOr, out);
  return out;
}

}  // namespace dltl
