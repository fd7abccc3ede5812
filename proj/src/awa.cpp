#include "dltl/awa.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "dltl/discount.hpp"
#include "dltl/errors.hpp"
#include "dltl/rewrites.hpp"

namespace dltl {

// --------------------------------------------------------------------------
// BoolPlus

BoolPlus BoolPlus::constant(bool value) {
  BoolPlus b;
  if (value) b.clauses_.push_back({});
  return b;
}

BoolPlus BoolPlus::var(StateId state) {
  BoolPlus b;
  b.clauses_.push_back({state});
  return b;
}

void BoolPlus::normalize() {
  for (auto& clause : clauses_) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  }
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  // Antichain: drop any clause containing another (x | (x & y) = x).
  std::vector<std::vector<StateId>> kept;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < clauses_.size() && !redundant; ++j) {
      if (j == i) continue;
      if (clauses_[j].size() >= clauses_[i].size()) continue;
      redundant = std::includes(clauses_[i].begin(), clauses_[i].end(), clauses_[j].begin(),
                                clauses_[j].end());
    }
    if (!redundant) kept.push_back(clauses_[i]);
  }
  // Equal-size distinct clauses never contain each other, so keeping the
  // first of an equal pair is unreachable after deduplication.
  clauses_ = std::move(kept);
}

BoolPlus disjoin(const BoolPlus& a, const BoolPlus& b) {
  BoolPlus out;
  out.clauses_ = a.clauses_;
  out.clauses_.insert(out.clauses_.end(), b.clauses_.begin(), b.clauses_.end());
  out.normalize();
  return out;
}

BoolPlus conjoin(const BoolPlus& a, const BoolPlus& b) {
  BoolPlus out;
  for (const auto& ca : a.clauses_) {
    for (const auto& cb : b.clauses_) {
      std::vector<StateId> merged = ca;
      merged.insert(merged.end(), cb.begin(), cb.end());
      out.clauses_.push_back(std::move(merged));
    }
  }
  out.normalize();
  return out;
}

std::string BoolPlus::to_text() const {
  if (is_false()) return "false";
  if (is_true()) return "true";
  std::string out;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += " | ";
    const auto& clause = clauses_[i];
    bool wrap = clauses_.size() > 1 && clause.size() > 1;
    if (wrap) out += '(';
    for (std::size_t j = 0; j < clause.size(); ++j) {
      if (j) out += " & ";
      out += 's' + std::to_string(clause[j]);
    }
    if (wrap) out += ')';
  }
  return out;
}

// --------------------------------------------------------------------------
// State hashing

std::size_t AwaStateHash::operator()(const AwaState& s) const {
  std::size_t h = static_cast<std::size_t>(s.kind);
  h = h * 1000003u + s.formula;
  h = h * 1000003u + s.shift;
  h = h * 1000003u + static_cast<std::size_t>(s.cmp);
  h = h * 1000003u + s.threshold.hash();
  h = h * 1000003u + static_cast<std::size_t>(s.negated);
  return h;
}

// --------------------------------------------------------------------------
// Construction

namespace {

Rational letter_weight(const Letter& letter, const std::string& atom) {
  std::optional<Rational> w = letter.weight(atom);
  if (!w) throw ModelError("letter '" + letter.to_text() + "' does not assign atom '" + atom + "'");
  return *w;
}

class Builder {
 public:
  Builder(FormulaFactory& factory, std::vector<Letter> alphabet, ExpansionPolicy policy)
      : factory_(factory), alphabet_(std::move(alphabet)), policy_(policy) {}

  Awa run(FormulaId root, Cmp cmp, const Rational& threshold) {
    AwaState init;
    init.kind = StateKind::Threshold;
    init.formula = root;
    init.cmp = cmp;
    init.threshold = threshold;
    intern(init);
    for (StateId s = 0; s < states_.size(); ++s) {
      if (transitions_.size() <= s) transitions_.resize(s + 1);
      transitions_[s].reserve(alphabet_.size());
      for (const Letter& sigma : alphabet_) {
        const AwaState state = states_[s];  // copy, states_ grows below
        BoolPlus row = state.kind == StateKind::Threshold
                           ? delta_threshold(state.formula, state.shift, state.cmp,
                                             state.threshold, sigma)
                           : delta_bool(state.formula, state.negated, sigma);
        transitions_[s].push_back(std::move(row));
      }
    }
    Awa awa;
    awa.alphabet = std::move(alphabet_);
    awa.states = std::move(states_);
    awa.transitions = std::move(transitions_);
    awa.accepting = std::move(accepting_);
    awa.initial = 0;
    awa.ranks = check_weakness(awa);
    return awa;
  }

 private:
  using StateIndex = std::unordered_map<AwaState, StateId, AwaStateHash>;

  StateId intern(AwaState s) {
    if (s.kind == StateKind::Threshold) {
      FormulaNode node = factory_.node(s.formula);
      if (node.kind == FormulaKind::Tend && s.threshold == node.constant) {
        // A tending-until whose threshold equals the limit behaves exactly
        // like the plain until: the discounted slack cancels out.
        s.formula = factory_.make_until(node.child[0], node.child[1]);
        s.shift = 0;
      }
    }
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    StateId id = static_cast<StateId>(states_.size());
    index_.emplace(s, id);
    accepting_.push_back(accepts(s));
    states_.push_back(std::move(s));
    return id;
  }

  bool accepts(const AwaState& s) const {
    if (factory_.node(s.formula).kind != FormulaKind::Until) return false;
    return s.kind == StateKind::Threshold ? s.cmp == Cmp::Less : s.negated;
  }

  // The successor-facing entry point: resolves assertions whose truth is
  // forced to constants and interns the rest as states.
  BoolPlus threshold_atom(FormulaId f, std::uint32_t shift, Cmp cmp, const Rational& t) {
    const FormulaNode node = factory_.node(f);
    switch (node.kind) {
      case FormulaKind::True:
        return BoolPlus::constant(cmp == Cmp::Greater ? t < 1 : t > 1);
      case FormulaKind::False:
        return BoolPlus::constant(cmp == Cmp::Greater ? false : t > 0);
      case FormulaKind::Not:
        return threshold_atom(node.child[0], 0, flip(cmp), Rational(1) - t);
      case FormulaKind::Scale: {
        Rational inner = t / node.constant;
        if (cmp == Cmp::Greater) {
          if (inner >= 1) return BoolPlus::constant(false);
        } else {
          if (inner > 1) return BoolPlus::constant(true);
        }
        return threshold_atom(node.child[0], 0, cmp, inner);
      }
      case FormulaKind::Until: {
        if (cmp == Cmp::Greater) {
          if (t >= 1) return BoolPlus::constant(false);
          if (t.is_zero()) return bool_atom(nonzero(f), false);
        } else {
          if (t > 1) return BoolPlus::constant(true);
          if (t.is_zero()) return BoolPlus::constant(false);
        }
        break;
      }
      case FormulaKind::DiscUntil: {
        Rational head = eval_discount(*node.disc, shift);  // largest factor still ahead
        if (cmp == Cmp::Greater) {
          if (t >= head) return BoolPlus::constant(false);
          if (t.is_zero()) return bool_atom(nonzero(f), false);
        } else {
          if (t > head) return BoolPlus::constant(true);
          if (t.is_zero()) return BoolPlus::constant(false);
        }
        break;
      }
      case FormulaKind::Tend: {
        if (t == node.constant) {
          return threshold_atom(factory_.make_until(node.child[0], node.child[1]), 0, cmp, t);
        }
        Rational head = eval_discount(*node.disc, shift);
        Rational tau = (t - (Rational(1) - head) * node.constant) / head;
        if (cmp == Cmp::Greater) {
          if (tau >= 1) return BoolPlus::constant(false);
          if (tau < 0) return BoolPlus::constant(true);
        } else {
          if (tau > 1) return BoolPlus::constant(true);
          if (tau <= 0) return BoolPlus::constant(false);
        }
        break;
      }
      default:
        break;  // atoms, probes, |, &, X: the transition reads the letter
    }
    AwaState s;
    s.kind = StateKind::Threshold;
    s.formula = f;
    s.shift = shift;
    s.cmp = cmp;
    s.threshold = t;
    return BoolPlus::var(intern(std::move(s)));
  }

  BoolPlus bool_atom(FormulaId f, bool negated) {
    FormulaNode node = factory_.node(f);
    while (node.kind == FormulaKind::Not) {
      negated = !negated;
      f = node.child[0];
      node = factory_.node(f);
    }
    if (node.kind == FormulaKind::True) return BoolPlus::constant(!negated);
    if (node.kind == FormulaKind::False) return BoolPlus::constant(negated);
    AwaState s;
    s.kind = StateKind::Boolean;
    s.formula = f;
    s.negated = negated;
    return BoolPlus::var(intern(std::move(s)));
  }

  FormulaId nonzero(FormulaId f) { return extreme_rewrites(factory_, f, cache_).nonzero; }

  BoolPlus successor(FormulaId f, const FormulaNode& node, std::uint32_t shift, Cmp cmp,
                     const Rational& t) {
    if (policy_ == ExpansionPolicy::FoldExponential &&
        node.disc->family == DiscountFunction::Family::Exponential) {
      // Advancing an exponential discount multiplies every coefficient by the
      // factor, which is the same assertion with the threshold divided by it.
      if (node.kind == FormulaKind::Tend) {
        Rational next = node.constant + (t - node.constant) / node.disc->factor;
        return threshold_atom(f, 0, cmp, next);
      }
      return threshold_atom(f, 0, cmp, t / node.disc->factor);
    }
    return threshold_atom(f, shift + 1, cmp, t);
  }

  BoolPlus delta_threshold(FormulaId f, std::uint32_t shift, Cmp cmp, const Rational& t,
                           const Letter& sigma) {
    const FormulaNode node = factory_.node(f);
    const bool greater = cmp == Cmp::Greater;
    switch (node.kind) {
      case FormulaKind::True:
        return BoolPlus::constant(greater ? t < 1 : t > 1);
      case FormulaKind::False:
        return BoolPlus::constant(greater ? false : t > 0);
      case FormulaKind::Atom: {
        Rational w = letter_weight(sigma, node.atom);
        return BoolPlus::constant(greater ? w > t : w < t);
      }
      case FormulaKind::AtomPositive: {
        Rational w = letter_weight(sigma, node.atom) > 0 ? 1 : 0;
        return BoolPlus::constant(greater ? w > t : w < t);
      }
      case FormulaKind::AtomOne: {
        Rational w = letter_weight(sigma, node.atom).is_one() ? 1 : 0;
        return BoolPlus::constant(greater ? w > t : w < t);
      }
      case FormulaKind::Not:
        return delta_threshold(node.child[0], 0, flip(cmp), Rational(1) - t, sigma);
      case FormulaKind::Or: {
        BoolPlus a = delta_threshold(node.child[0], 0, cmp, t, sigma);
        BoolPlus b = delta_threshold(node.child[1], 0, cmp, t, sigma);
        return greater ? disjoin(a, b) : conjoin(a, b);
      }
      case FormulaKind::And: {
        BoolPlus a = delta_threshold(node.child[0], 0, cmp, t, sigma);
        BoolPlus b = delta_threshold(node.child[1], 0, cmp, t, sigma);
        return greater ? conjoin(a, b) : disjoin(a, b);
      }
      case FormulaKind::Next:
        return threshold_atom(node.child[0], 0, cmp, t);
      case FormulaKind::Until: {
        if (greater) {
          if (t >= 1) return BoolPlus::constant(false);
          if (t.is_zero()) return delta_bool(nonzero(f), false, sigma);
        } else {
          if (t > 1) return BoolPlus::constant(true);
          if (t.is_zero()) return BoolPlus::constant(false);
        }
        BoolPlus right = delta_threshold(node.child[1], 0, cmp, t, sigma);
        BoolPlus left = delta_threshold(node.child[0], 0, cmp, t, sigma);
        BoolPlus self = threshold_atom(f, 0, cmp, t);
        return greater ? disjoin(right, conjoin(left, self))
                       : conjoin(right, disjoin(left, self));
      }
      case FormulaKind::DiscUntil: {
        Rational head = eval_discount(*node.disc, shift);
        if (greater) {
          if (t.is_zero()) return delta_bool(nonzero(f), false, sigma);
          if (t >= head) return BoolPlus::constant(false);
        } else {
          if (t.is_zero()) return BoolPlus::constant(false);
          if (t > head) return BoolPlus::constant(true);
        }
        Rational inner = t / head;
        BoolPlus right = delta_threshold(node.child[1], 0, cmp, inner, sigma);
        BoolPlus left = delta_threshold(node.child[0], 0, cmp, inner, sigma);
        BoolPlus next = successor(f, node, shift, cmp, t);
        return greater ? disjoin(right, conjoin(left, next))
                       : conjoin(right, disjoin(left, next));
      }
      case FormulaKind::Scale: {
        Rational inner = t / node.constant;
        if (greater) {
          if (inner >= 1) return BoolPlus::constant(false);
        } else {
          if (inner > 1) return BoolPlus::constant(true);
        }
        return delta_threshold(node.child[0], 0, cmp, inner, sigma);
      }
      case FormulaKind::Tend: {
        if (t == node.constant) {
          return delta_threshold(factory_.make_until(node.child[0], node.child[1]), 0, cmp, t,
                                 sigma);
        }
        Rational head = eval_discount(*node.disc, shift);
        Rational tau = (t - (Rational(1) - head) * node.constant) / head;
        if (greater) {
          if (tau >= 1) return BoolPlus::constant(false);
          if (tau < 0) return BoolPlus::constant(true);
        } else {
          if (tau > 1) return BoolPlus::constant(true);
          if (tau <= 0) return BoolPlus::constant(false);
        }
        BoolPlus right = delta_threshold(node.child[1], 0, cmp, tau, sigma);
        BoolPlus left = delta_threshold(node.child[0], 0, cmp, tau, sigma);
        BoolPlus next = successor(f, node, shift, cmp, t);
        return greater ? disjoin(right, conjoin(left, next))
                       : conjoin(right, disjoin(left, next));
      }
    }
    throw ModelError("unhandled formula kind in transition");
  }

  BoolPlus delta_bool(FormulaId f, bool negated, const Letter& sigma) {
    const FormulaNode node = factory_.node(f);
    switch (node.kind) {
      case FormulaKind::True:
        return BoolPlus::constant(!negated);
      case FormulaKind::False:
        return BoolPlus::constant(negated);
      case FormulaKind::Atom:
        return BoolPlus::constant(letter_weight(sigma, node.atom).is_one() != negated);
      case FormulaKind::AtomPositive:
        return BoolPlus::constant((letter_weight(sigma, node.atom) > 0) != negated);
      case FormulaKind::AtomOne:
        return BoolPlus::constant(letter_weight(sigma, node.atom).is_one() != negated);
      case FormulaKind::Not:
        return delta_bool(node.child[0], !negated, sigma);
      case FormulaKind::Or: {
        BoolPlus a = delta_bool(node.child[0], negated, sigma);
        BoolPlus b = delta_bool(node.child[1], negated, sigma);
        return negated ? conjoin(a, b) : disjoin(a, b);
      }
      case FormulaKind::And: {
        BoolPlus a = delta_bool(node.child[0], negated, sigma);
        BoolPlus b = delta_bool(node.child[1], negated, sigma);
        return negated ? disjoin(a, b) : conjoin(a, b);
      }
      case FormulaKind::Next:
        return bool_atom(node.child[0], negated);
      case FormulaKind::Until: {
        BoolPlus right = delta_bool(node.child[1], negated, sigma);
        BoolPlus left = delta_bool(node.child[0], negated, sigma);
        BoolPlus self = bool_atom(f, negated);
        return negated ? conjoin(right, disjoin(left, self))
                       : disjoin(right, conjoin(left, self));
      }
      default:
        throw ModelError("formula is not Boolean: " + factory_.to_text(f));
    }
  }

  FormulaFactory& factory_;
  std::vector<Letter> alphabet_;
  ExpansionPolicy policy_;
  RewriteCache cache_;
  std::vector<AwaState> states_;
  std::vector<std::vector<BoolPlus>> transitions_;
  std::vector<bool> accepting_;
  StateIndex index_;
};

}  // namespace

Awa build_awa(FormulaFactory& factory, FormulaId formula, Cmp cmp, const Rational& threshold,
              std::vector<Letter> alphabet, ExpansionPolicy policy) {
  if (!threshold.in_unit_interval()) {
    throw ModelError("threshold " + threshold.str() + " outside [0,1]");
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw ModelError("alphabet is empty");
  for (const std::string& atom : factory.atoms(formula)) {
    for (const Letter& letter : alphabet) {
      if (!letter.assigns(atom)) {
        throw ModelError("letter '" + letter.to_text() + "' does not assign atom '" + atom + "'");
      }
    }
  }
  return Builder(factory, std::move(alphabet), policy).run(formula, cmp, threshold);
}

std::size_t Awa::letter_index(const Letter& letter) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
  if (it == alphabet.end() || !(*it == letter)) {
    throw ModelError("letter '" + letter.to_text() + "' is not in the alphabet");
  }
  return static_cast<std::size_t>(it - alphabet.begin());
}

const BoolPlus& delta(const Awa& awa, StateId state, const Letter& letter) {
  return awa.transitions[state][awa.letter_index(letter)];
}

bool is_accepting_state(const Awa& awa, StateId state) { return awa.accepting[state]; }

std::vector<std::uint32_t> check_weakness(const Awa& awa) {
  const std::size_t n = awa.states.size();
  std::vector<std::vector<StateId>> adj(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (const BoolPlus& row : awa.transitions[s]) {
      for (const auto& clause : row.minimal_models()) {
        for (StateId target : clause) {
          if (target != s) adj[s].push_back(target);
        }
      }
    }
    std::sort(adj[s].begin(), adj[s].end());
    adj[s].erase(std::unique(adj[s].begin(), adj[s].end()), adj[s].end());
  }
  // Iterative DFS; a gray-on-gray edge is a cycle longer than a self-loop.
  std::vector<std::uint8_t> color(n, 0);  // 0 white, 1 gray, 2 black
  std::vector<std::uint32_t> rank(n, 0);
  std::uint32_t finished = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<StateId, std::size_t>> stack;
    stack.emplace_back(static_cast<StateId>(root), 0);
    color[root] = 1;
    while (!stack.empty()) {
      StateId s = stack.back().first;
      std::size_t cursor = stack.back().second;
      if (cursor == adj[s].size()) {
        color[s] = 2;
        rank[s] = finished++;
        stack.pop_back();
        continue;
      }
      stack.back().second = cursor + 1;
      StateId target = adj[s][cursor];
      if (color[target] == 1) {
        throw ModelError("weakness violated: cycle through state " + std::to_string(target));
      }
      if (color[target] == 0) {
        color[target] = 1;
        stack.emplace_back(target, 0);
      }
    }
  }
  return rank;
}

std::size_t threshold_state_count(const Awa& awa) {
  std::size_t count = 0;
  for (const AwaState& s : awa.states) {
    if (s.kind == StateKind::Threshold) ++count;
  }
  return count;
}

namespace {

std::string wrapped_formula(const FormulaFactory& factory, FormulaId id) {
  std::string text = factory.to_text(id);
  if (text.find(' ') != std::string::npos) return "(" + text + ")";
  return text;
}

}  // namespace

std::string state_to_text(const Awa& awa, const FormulaFactory& factory, StateId state) {
  const AwaState& s = awa.states[state];
  if (s.kind == StateKind::Boolean) {
    if (s.negated) return "!(" + factory.to_text(s.formula) + ")";
    return wrapped_formula(factory, s.formula);
  }
  std::string out = wrapped_formula(factory, s.formula);
  out += ' ';
  out += cmp_text(s.cmp);
  out += ' ';
  out += s.threshold.str();
  if (s.shift) out += " shift " + std::to_string(s.shift);
  return out;
}

std::string dump_awa(const Awa& awa, const FormulaFactory& factory) {
  std::string out = "awa states=" + std::to_string(awa.states.size()) +
                    " letters=" + std::to_string(awa.alphabet.size()) +
                    " initial=s" + std::to_string(awa.initial) + "\n";
  for (std::size_t l = 0; l < awa.alphabet.size(); ++l) {
    out += "letter " + std::to_string(l) + " = " + awa.alphabet[l].to_text() + "\n";
  }
  for (StateId s = 0; s < awa.states.size(); ++s) {
    out += "state s" + std::to_string(s) + " = " + state_to_text(awa, factory, s);
    out += awa.states[s].kind == StateKind::Threshold ? "  [threshold" : "  [boolean";
    out += awa.accepting[s] ? ", accepting" : ", rejecting";
    out += ", rank " + std::to_string(awa.ranks[s]) + "]\n";
    for (std::size_t l = 0; l < awa.alphabet.size(); ++l) {
      out += "  on " + awa.alphabet[l].to_text() + " -> " + awa.transitions[s][l].to_text() + "\n";
    }
  }
  return out;
}

std::string dump_awa_dot(const Awa& awa, const FormulaFactory& factory) {
  std::string out = "digraph awa {\n  rankdir=LR;\n  node [shape=box];\n";
  out += "  init [shape=point];\n";
  out += "  init -> s" + std::to_string(awa.initial) + ";\n";
  for (StateId s = 0; s < awa.states.size(); ++s) {
    out += "  s" + std::to_string(s) + " [label=\"" + state_to_text(awa, factory, s) + "\"";
    if (awa.accepting[s]) out += ", peripheries=2";
    out += "];\n";
  }
  for (StateId s = 0; s < awa.states.size(); ++s) {
    std::vector<std::vector<std::string>> labels(awa.states.size());
    for (std::size_t l = 0; l < awa.alphabet.size(); ++l) {
      std::vector<StateId> targets;
      for (const auto& clause : awa.transitions[s][l].minimal_models()) {
        targets.insert(targets.end(), clause.begin(), clause.end());
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (StateId target : targets) labels[target].push_back(awa.alphabet[l].to_text());
    }
    for (StateId target = 0; target < labels.size(); ++target) {
      if (labels[target].empty()) continue;
      std::string joined;
      for (std::size_t i = 0; i < labels[target].size(); ++i) {
        if (i) joined += ", ";
        joined += labels[target][i];
      }
      out += "  s" + std::to_string(s) + " -> s" + std::to_string(target) + " [label=\"" +
             joined + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace dltl
