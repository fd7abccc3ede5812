#include "dltl/eval.hpp"

#include <optional>
#include <unordered_map>

#include "dltl/errors.hpp"

namespace dltl {
namespace {

class Evaluator {
 public:
  Evaluator(const FormulaFactory& factory, const Lasso& lasso, unsigned window_scale)
      : factory_(factory), lasso_(lasso), window_(lasso.classes() * window_scale) {}

  const std::vector<Rational>& values(FormulaId id) {
    auto it = memo_.find(id);
    if (it != memo_.end()) return it->second;
    std::vector<Rational> out = compute(id);
    return memo_.emplace(id, std::move(out)).first->second;
  }

 private:
  Rational weight_at(std::size_t cls, const std::string& atom) const {
    auto w = lasso_.letter(cls).weight(atom);
    if (!w) throw ModelError("letter does not assign atom '" + atom + "'");
    return *w;
  }

  std::vector<Rational> compute(FormulaId id) {
    const FormulaNode& n = factory_.node(id);
    const std::size_t classes = lasso_.classes();
    std::vector<Rational> out(classes, Rational(0));
    switch (n.kind) {
      case FormulaKind::True:
        for (auto& v : out) v = Rational(1);
        return out;
      case FormulaKind::False:
        return out;
      case FormulaKind::Atom:
        for (std::size_t c = 0; c < classes; ++c) out[c] = weight_at(c, n.atom);
        return out;
      case FormulaKind::AtomPositive:
        for (std::size_t c = 0; c < classes; ++c) {
          out[c] = weight_at(c, n.atom) > 0 ? Rational(1) : Rational(0);
        }
        return out;
      case FormulaKind::AtomOne:
        for (std::size_t c = 0; c < classes; ++c) {
          out[c] = weight_at(c, n.atom).is_one() ? Rational(1) : Rational(0);
        }
        return out;
      case FormulaKind::Not: {
        const auto& a = values(n.child[0]);
        for (std::size_t c = 0; c < classes; ++c) out[c] = Rational(1) - a[c];
        return out;
      }
      case FormulaKind::Or: {
        const auto& a = values(n.child[0]);
        const auto& b = values(n.child[1]);
        for (std::size_t c = 0; c < classes; ++c) out[c] = max(a[c], b[c]);
        return out;
      }
      case FormulaKind::And: {
        const auto& a = values(n.child[0]);
        const auto& b = values(n.child[1]);
        for (std::size_t c = 0; c < classes; ++c) out[c] = min(a[c], b[c]);
        return out;
      }
      case FormulaKind::Next: {
        const auto& a = values(n.child[0]);
        for (std::size_t c = 0; c < classes; ++c) out[c] = a[lasso_.next_class(c)];
        return out;
      }
      case FormulaKind::Scale: {
        const auto& a = values(n.child[0]);
        for (std::size_t c = 0; c < classes; ++c) out[c] = n.constant * a[c];
        return out;
      }
      case FormulaKind::Until: {
        const auto& left = values(n.child[0]);
        const auto& right = values(n.child[1]);
        for (std::size_t c = 0; c < classes; ++c) {
          Rational best(0);
          std::optional<Rational> prefix_min;
          std::size_t cur = c;
          for (std::size_t k = 0; k < window_; ++k) {
            Rational term = right[cur];
            if (prefix_min) term = min(term, *prefix_min);
            best = max(best, term);
            prefix_min = prefix_min ? min(*prefix_min, left[cur]) : left[cur];
            cur = lasso_.next_class(cur);
          }
          out[c] = best;
        }
        return out;
      }
      case FormulaKind::DiscUntil: {
        const auto& left = values(n.child[0]);
        const auto& right = values(n.child[1]);
        const DiscountFunction& f = *n.disc;
        for (std::size_t c = 0; c < classes; ++c) {
          Rational best(0);
          std::optional<Rational> prefix_min;
          std::size_t cur = c;
          for (std::size_t k = 0; k < window_; ++k) {
            Rational factor = eval_discount(f, k);
            Rational term = factor * right[cur];
            if (prefix_min) term = min(term, *prefix_min);
            best = max(best, term);
            Rational guard = factor * left[cur];
            prefix_min = prefix_min ? min(*prefix_min, guard) : guard;
            cur = lasso_.next_class(cur);
          }
          out[c] = best;
        }
        return out;
      }
      case FormulaKind::Tend: {
        const auto& left = values(n.child[0]);
        const auto& right = values(n.child[1]);
        const DiscountFunction& f = *n.disc;
        const Rational& z = n.constant;
        for (std::size_t c = 0; c < classes; ++c) {
          Rational best(0);
          std::optional<Rational> prefix_min;
          std::size_t cur = c;
          for (std::size_t k = 0; k < window_; ++k) {
            Rational factor = eval_discount(f, k);
            Rational blend = Rational(1) - factor;
            Rational term = factor * right[cur] + blend * z;
            if (prefix_min) term = min(term, *prefix_min);
            best = max(best, term);
            Rational guard = factor * left[cur] + blend * z;
            prefix_min = prefix_min ? min(*prefix_min, guard) : guard;
            cur = lasso_.next_class(cur);
          }
          // The terms tend to min(z, prefix minimum); the supremum may be
          // approached without being attained, so take the limit explicitly.
          out[c] = max(best, min(z, prefix_min ? *prefix_min : z));
        }
        return out;
      }
    }
    throw ModelError("unknown formula kind");
  }

  const FormulaFactory& factory_;
  const Lasso& lasso_;
  const std::size_t window_;
  std::unordered_map<FormulaId, std::vector<Rational>> memo_;
};

}  // namespace

Rational eval_lasso(const FormulaFactory& factory, FormulaId id, const Lasso& lasso,
                    unsigned window_scale) {
  if (window_scale == 0) throw ModelError("window scale must be positive");
  Evaluator eval(factory, lasso, window_scale);
  return eval.values(id)[0];
}

std::vector<bool> eval_bool_ltl_classes(const FormulaFactory& factory, FormulaId id,
                                        const Lasso& lasso) {
  const FormulaNode& n = factory.node(id);
  const std::size_t classes = lasso.classes();
  auto weight_at = [&](std::size_t cls, const std::string& atom) {
    auto w = lasso.letter(cls).weight(atom);
    if (!w) throw ModelError("letter does not assign atom '" + atom + "'");
    return *w;
  };
  std::vector<bool> out(classes, false);
  switch (n.kind) {
    case FormulaKind::True:
      out.assign(classes, true);
      return out;
    case FormulaKind::False:
      return out;
    case FormulaKind::Atom:
      for (std::size_t c = 0; c < classes; ++c) {
        Rational w = weight_at(c, n.atom);
        if (!w.is_zero() && !w.is_one()) {
          throw ModelError("plain atom '" + n.atom + "' over a non-Boolean weight " + w.str());
        }
        out[c] = w.is_one();
      }
      return out;
    case FormulaKind::AtomPositive:
      for (std::size_t c = 0; c < classes; ++c) out[c] = weight_at(c, n.atom) > 0;
      return out;
    case FormulaKind::AtomOne:
      for (std::size_t c = 0; c < classes; ++c) out[c] = weight_at(c, n.atom).is_one();
      return out;
    case FormulaKind::Not: {
      out = eval_bool_ltl_classes(factory, n.child[0], lasso);
      out.flip();
      return out;
    }
    case FormulaKind::Or: {
      out = eval_bool_ltl_classes(factory, n.child[0], lasso);
      std::vector<bool> b = eval_bool_ltl_classes(factory, n.child[1], lasso);
      for (std::size_t c = 0; c < classes; ++c) out[c] = out[c] || b[c];
      return out;
    }
    case FormulaKind::And: {
      out = eval_bool_ltl_classes(factory, n.child[0], lasso);
      std::vector<bool> b = eval_bool_ltl_classes(factory, n.child[1], lasso);
      for (std::size_t c = 0; c < classes; ++c) out[c] = out[c] && b[c];
      return out;
    }
    case FormulaKind::Next: {
      std::vector<bool> a = eval_bool_ltl_classes(factory, n.child[0], lasso);
      for (std::size_t c = 0; c < classes; ++c) out[c] = a[lasso.next_class(c)];
      return out;
    }
    case FormulaKind::Until: {
      std::vector<bool> left = eval_bool_ltl_classes(factory, n.child[0], lasso);
      std::vector<bool> right = eval_bool_ltl_classes(factory, n.child[1], lasso);
      // Least fixpoint of U = right | (left & X U) over the class cycle.
      out = right;
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t c = classes; c-- > 0;) {
          bool next = out[c] || (left[c] && out[lasso.next_class(c)]);
          if (next != out[c]) {
            out[c] = next;
            changed = true;
          }
        }
      }
      return out;
    }
    case FormulaKind::DiscUntil:
    case FormulaKind::Scale:
    case FormulaKind::Tend:
      break;
  }
  throw ModelError("formula is not Boolean: " + factory.to_text(id));
}

bool eval_bool_ltl(const FormulaFactory& factory, FormulaId id, const Lasso& lasso) {
  return eval_bool_ltl_classes(factory, id, lasso)[0];
}

}  // namespace dltl
