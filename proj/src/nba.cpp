#include "dltl/nba.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "dltl/errors.hpp"

namespace dltl {

bool dominates(const FormulaFactory& factory, const AwaState& a1, const AwaState& a2) {
  if (a1.kind != StateKind::Threshold || a2.kind != StateKind::Threshold) return false;
  if (a1.formula != a2.formula || a1.cmp != a2.cmp) return false;
  if (a1.shift == a2.shift && a1.threshold == a2.threshold) return false;
  const bool less = a1.cmp == Cmp::Less;
  if (less ? a1.threshold > a2.threshold : a1.threshold < a2.threshold) return false;
  if (a1.shift == a2.shift) return true;
  if (less ? a1.shift > a2.shift : a1.shift < a2.shift) return false;
  // Shift monotonicity holds when every contributing term sits above the
  // tending limit, which the implying threshold guarantees.
  const FormulaNode& node = factory.node(a1.formula);
  if (node.kind == FormulaKind::DiscUntil) return true;
  if (node.kind == FormulaKind::Tend) return a1.threshold > node.constant;
  return false;
}

AssertionSet minimize_assertion_set(const FormulaFactory& factory, const Awa& awa,
                                    std::vector<StateId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  AssertionSet out;
  for (StateId s : members) {
    bool redundant = false;
    for (StateId m : members) {
      if (m == s) continue;
      if (dominates(factory, awa.states[m], awa.states[s])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.members.push_back(s);
  }
  out.minimal = true;
  return out;
}

namespace {

struct NbaStateHash {
  std::size_t operator()(const NbaState& s) const {
    std::size_t h = 0;
    for (StateId m : s.set.members) h = h * 1000003u + m + 1;
    h = h * 1000003u + 0x9e3779b9u;
    for (StateId m : s.obligations.members) h = h * 1000003u + m + 1;
    return h;
  }
};

class Translator {
 public:
  Translator(const FormulaFactory& factory, const Awa& awa, bool prune)
      : factory_(factory), awa_(awa), prune_(prune) {}

  Nba run() {
    NbaState init;
    init.set = make_set({awa_.initial});
    init.obligations = strip_accepting(init.set.members);
    intern(std::move(init));
    for (NbaStateId q = 0; q < states_.size(); ++q) {
      transitions_.resize(states_.size());
      transitions_[q].resize(awa_.alphabet.size());
      for (std::size_t l = 0; l < awa_.alphabet.size(); ++l) {
        const NbaState state = states_[q];  // copy, states_ grows below
        transitions_[q][l] = successors(state, l);
      }
    }
    Nba nba;
    nba.alphabet = awa_.alphabet;
    nba.states = std::move(states_);
    nba.transitions = std::move(transitions_);
    nba.accepting = std::move(accepting_);
    nba.initial = 0;
    return nba;
  }

 private:
  AssertionSet make_set(std::vector<StateId> members) {
    if (prune_) return minimize_assertion_set(factory_, awa_, std::move(members));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    AssertionSet out;
    out.members = std::move(members);
    return out;
  }

  AssertionSet strip_accepting(const std::vector<StateId>& members) const {
    AssertionSet out;
    for (StateId m : members) {
      if (!awa_.accepting[m]) out.members.push_back(m);
    }
    out.minimal = prune_;
    return out;
  }

  NbaStateId intern(NbaState s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    NbaStateId id = static_cast<NbaStateId>(states_.size());
    index_.emplace(s, id);
    accepting_.push_back(s.obligations.members.empty());
    states_.push_back(std::move(s));
    return id;
  }

  // All successors of (S,O) on the letter: one minimal model chosen per
  // member transition, obligations followed through the same choices.
  std::vector<NbaStateId> successors(const NbaState& state, std::size_t letter) {
    const auto& members = state.set.members;
    std::vector<const std::vector<std::vector<StateId>>*> options;
    options.reserve(members.size());
    for (StateId m : members) {
      const BoolPlus& row = awa_.transitions[m][letter];
      if (row.is_false()) return {};
      options.push_back(&row.minimal_models());
    }
    std::vector<NbaStateId> out;
    std::vector<std::size_t> choice(members.size(), 0);
    while (true) {
      std::vector<StateId> next_set;
      std::vector<StateId> next_obl;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& clause = (*options[i])[choice[i]];
        next_set.insert(next_set.end(), clause.begin(), clause.end());
        if (!state.obligations.members.empty() &&
            std::binary_search(state.obligations.members.begin(),
                               state.obligations.members.end(), members[i])) {
          next_obl.insert(next_obl.end(), clause.begin(), clause.end());
        }
      }
      out.push_back(intern(build_state(std::move(next_set), std::move(next_obl),
                                       state.obligations.members.empty())));
      // Odometer over the per-member clause choices.
      std::size_t i = 0;
      for (; i < members.size(); ++i) {
        if (++choice[i] < options[i]->size()) break;
        choice[i] = 0;
      }
      if (i == members.size()) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  NbaState build_state(std::vector<StateId> next_set, std::vector<StateId> next_obl,
                       bool breakpoint) {
    NbaState s;
    s.set = make_set(std::move(next_set));
    if (breakpoint) {
      // Fresh round: everything non-accepting is owed again.
      s.obligations = strip_accepting(s.set.members);
      return s;
    }
    std::sort(next_obl.begin(), next_obl.end());
    next_obl.erase(std::unique(next_obl.begin(), next_obl.end()), next_obl.end());
    AssertionSet obl;
    obl.minimal = prune_;
    for (StateId m : s.set.members) {
      if (awa_.accepting[m]) continue;
      bool owed = std::binary_search(next_obl.begin(), next_obl.end(), m);
      if (!owed && prune_) {
        // The member may stand in for obligations its assertion implies.
        for (StateId o : next_obl) {
          if (std::binary_search(s.set.members.begin(), s.set.members.end(), o)) continue;
          if (dominates(factory_, awa_.states[m], awa_.states[o])) {
            owed = true;
            break;
          }
        }
      }
      if (owed) obl.members.push_back(m);
    }
    s.obligations = std::move(obl);
    return s;
  }

  const FormulaFactory& factory_;
  const Awa& awa_;
  bool prune_;
  std::vector<NbaState> states_;
  std::vector<std::vector<std::vector<NbaStateId>>> transitions_;
  std::vector<bool> accepting_;
  std::unordered_map<NbaState, NbaStateId, NbaStateHash> index_;
};

}  // namespace

Nba awa_to_nba(const FormulaFactory& factory, const Awa& awa, bool prune) {
  return Translator(factory, awa, prune).run();
}

std::size_t Nba::letter_index(const Letter& letter) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
  if (it == alphabet.end() || !(*it == letter)) {
    throw ModelError("letter '" + letter.to_text() + "' is not in the alphabet");
  }
  return static_cast<std::size_t>(it - alphabet.begin());
}

bool nba_membership(const Nba& nba, const Lasso& lasso) {
  const std::size_t classes = lasso.classes();
  const std::size_t q_count = nba.states.size();
  std::vector<std::size_t> letter_of(classes);
  for (std::size_t c = 0; c < classes; ++c) letter_of[c] = nba.letter_index(lasso.letter(c));
  auto node_id = [q_count](std::size_t c, NbaStateId q) { return c * q_count + q; };
  auto reach = [&](std::size_t from, std::vector<std::uint8_t>& seen) {
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      std::size_t n = stack.back();
      stack.pop_back();
      std::size_t c = n / q_count;
      NbaStateId q = static_cast<NbaStateId>(n % q_count);
      std::size_t nc = lasso.next_class(c);
      for (NbaStateId succ : nba.transitions[q][letter_of[c]]) {
        std::size_t m = node_id(nc, succ);
        if (!seen[m]) {
          seen[m] = 1;
          stack.push_back(m);
        }
      }
    }
  };
  std::vector<std::uint8_t> reachable(classes * q_count, 0);
  reachable[node_id(0, nba.initial)] = 1;
  reach(node_id(0, nba.initial), reachable);
  for (std::size_t c = 0; c < classes; ++c) {
    for (NbaStateId q = 0; q < q_count; ++q) {
      if (!reachable[node_id(c, q)] || !nba.accepting[q]) continue;
      // Does the accepting node close a cycle on itself?
      std::vector<std::uint8_t> seen(classes * q_count, 0);
      reach(node_id(c, q), seen);
      if (seen[node_id(c, q)]) return true;
    }
  }
  return false;
}

namespace {

std::string set_text(const AssertionSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.members.size(); ++i) {
    if (i) out += ",";
    out += 's' + std::to_string(set.members[i]);
  }
  out += "}";
  return out;
}

}  // namespace

std::string dump_nba(const Nba& nba) {
  std::string out = "nba states=" + std::to_string(nba.states.size()) +
                    " letters=" + std::to_string(nba.alphabet.size()) +
                    " initial=n" + std::to_string(nba.initial) + "\n";
  for (std::size_t l = 0; l < nba.alphabet.size(); ++l) {
    out += "letter " + std::to_string(l) + " = " + nba.alphabet[l].to_text() + "\n";
  }
  for (NbaStateId q = 0; q < nba.states.size(); ++q) {
    out += "state n" + std::to_string(q) + " = " + set_text(nba.states[q].set) +
           " owing " + set_text(nba.states[q].obligations);
    out += nba.accepting[q] ? "  [accepting]\n" : "  [rejecting]\n";
    for (std::size_t l = 0; l < nba.alphabet.size(); ++l) {
      out += "  on " + nba.alphabet[l].to_text() + " ->";
      if (nba.transitions[q][l].empty()) {
        out += " none";
      } else {
        for (NbaStateId succ : nba.transitions[q][l]) out += " n" + std::to_string(succ);
      }
      out += "\n";
    }
  }
  return out;
}

std::string dump_nba_dot(const Nba& nba) {
  std::string out = "digraph nba {\n  rankdir=LR;\n  node [shape=box];\n";
  out += "  init [shape=point];\n";
  out += "  init -> n" + std::to_string(nba.initial) + ";\n";
  for (NbaStateId q = 0; q < nba.states.size(); ++q) {
    out += "  n" + std::to_string(q) + " [label=\"" + set_text(nba.states[q].set) + " owing " +
           set_text(nba.states[q].obligations) + "\"";
    if (nba.accepting[q]) out += ", peripheries=2";
    out += "];\n";
  }
  for (NbaStateId q = 0; q < nba.states.size(); ++q) {
    std::vector<std::vector<std::string>> labels(nba.states.size());
    for (std::size_t l = 0; l < nba.alphabet.size(); ++l) {
      for (NbaStateId succ : nba.transitions[q][l]) {
        labels[succ].push_back(nba.alphabet[l].to_text());
      }
    }
    for (NbaStateId succ = 0; succ < labels.size(); ++succ) {
      if (labels[succ].empty()) continue;
      std::string joined;
      for (std::size_t i = 0; i < labels[succ].size(); ++i) {
        if (i) joined += ", ";
        joined += labels[succ][i];
      }
      out += "  n" + std::to_string(q) + " -> n" + std::to_string(succ) + " [label=\"" + joined +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace dltl
