#include "dltl/kripke.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dltl/errors.hpp"

namespace dltl {

std::vector<Letter> KripkeStructure::alphabet() const {
  std::vector<Letter> letters;
  for (const KripkeState& s : states) letters.push_back(s.label);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

std::vector<std::uint32_t> KripkeStructure::initial_states() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < states.size(); ++i) {
    if (states[i].initial) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

KripkeStructure load_kripke(std::string_view text) {
  KripkeStructure k;
  std::set<std::string> atom_set;
  std::map<std::string, std::uint32_t> state_index;
  std::vector<std::pair<std::string, std::string>> edges;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> words = split_words(raw);
    if (words.empty()) continue;
    const std::string& head = words.front();
    if (head == "aps:") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!atom_set.insert(words[i]).second) {
          throw ParseError("atom '" + words[i] + "' declared twice", line_no, 1);
        }
        k.atoms.push_back(words[i]);
      }
    } else if (head == "state:") {
      if (words.size() < 2) throw ParseError("state line without a name", line_no, 1);
      KripkeState s;
      s.name = words[1];
      if (state_index.count(s.name)) {
        throw ParseError("state '" + s.name + "' declared twice", line_no, 1);
      }
      std::vector<std::pair<std::string, Rational>> entries;
      for (std::size_t i = 2; i < words.size(); ++i) {
        if (words[i] == "init") {
          s.initial = true;
          continue;
        }
        std::size_t eq = words[i].find('=');
        if (eq == std::string::npos) {
          throw ParseError("expected atom=weight, got '" + words[i] + "'", line_no, 1);
        }
        std::string atom = words[i].substr(0, eq);
        if (!atom_set.count(atom)) {
          throw ParseError("state '" + s.name + "' assigns undeclared atom '" + atom + "'",
                           line_no, 1);
        }
        auto w = Rational::parse(std::string_view(words[i]).substr(eq + 1));
        if (!w) throw ParseError("malformed weight in '" + words[i] + "'", line_no, 1);
        entries.emplace_back(atom, *w);
      }
      s.label = Letter(std::move(entries));
      for (const std::string& atom : k.atoms) {
        if (!s.label.assigns(atom)) {
          throw ModelError("state '" + s.name + "' does not assign atom '" + atom + "'");
        }
      }
      state_index.emplace(s.name, static_cast<std::uint32_t>(k.states.size()));
      k.states.push_back(std::move(s));
    } else if (head == "trans:") {
      if (words.size() != 3) {
        throw ParseError("expected 'trans: <from> <to>'", line_no, 1);
      }
      edges.emplace_back(words[1], words[2]);
    } else {
      throw ParseError("unknown directive '" + head + "'", line_no, 1);
    }
  }

  for (const auto& [from, to] : edges) {
    auto fi = state_index.find(from);
    auto ti = state_index.find(to);
    if (fi == state_index.end()) throw ModelError("transition from unknown state '" + from + "'");
    if (ti == state_index.end()) throw ModelError("transition to unknown state '" + to + "'");
    k.states[fi->second].successors.push_back(ti->second);
  }
  for (KripkeState& s : k.states) {
    std::sort(s.successors.begin(), s.successors.end());
    s.successors.erase(std::unique(s.successors.begin(), s.successors.end()),
                       s.successors.end());
    if (s.successors.empty()) {
      throw ModelError("state '" + s.name + "' has no successor");
    }
  }
  if (k.states.empty()) throw ModelError("model has no states");
  if (k.initial_states().empty()) throw ModelError("model has no initial state");
  return k;
}

std::vector<Lasso> enumerate_lassos(const KripkeStructure& k, std::size_t max_prefix,
                                    std::size_t max_period) {
  std::vector<Lasso> out;
  std::set<std::string> seen;
  std::vector<std::uint32_t> walk;

  auto emit = [&](std::size_t split) {
    Lasso lasso;
    for (std::size_t i = 0; i < split; ++i) lasso.prefix.push_back(k.states[walk[i]].label);
    for (std::size_t i = split; i < walk.size(); ++i) lasso.period.push_back(k.states[walk[i]].label);
    if (seen.insert(lasso.to_text()).second) out.push_back(std::move(lasso));
  };

  auto dfs = [&](auto&& self, std::uint32_t state) -> void {
    walk.push_back(state);
    const std::size_t length = walk.size();
    for (std::size_t split = 0; split < length; ++split) {
      const std::size_t period = length - split;
      if (split > max_prefix || period > max_period) continue;
      const auto& succ = k.states[walk.back()].successors;
      if (std::binary_search(succ.begin(), succ.end(), walk[split])) emit(split);
    }
    if (length < max_prefix + max_period) {
      for (std::uint32_t next : k.states[state].successors) self(self, next);
    }
    walk.pop_back();
  };

  for (std::uint32_t init : k.initial_states()) dfs(dfs, init);
  return out;
}

bool realizes(const KripkeStructure& k, const Lasso& lasso) {
  const std::size_t classes = lasso.classes();
  auto matches = [&](std::uint32_t state, std::size_t cls) {
    return k.states[state].label == lasso.letter(cls);
  };
  // Nodes of the synchronized graph: class * |states| + state.  The word is
  // fixed, so an infinite matching path exists iff a cycle is reachable.
  const std::size_t nodes = classes * k.states.size();
  std::vector<std::uint8_t> color(nodes, 0);  // 0 unvisited, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, successor cursor

  for (std::uint32_t init : k.initial_states()) {
    if (!matches(init, 0)) continue;
    std::size_t start = 0 * k.states.size() + init;
    if (color[start] != 0) continue;
    color[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      const std::size_t node = stack.back().first;
      std::size_t cursor = stack.back().second;
      const std::size_t cls = node / k.states.size();
      const std::uint32_t state = static_cast<std::uint32_t>(node % k.states.size());
      const std::size_t next_cls = lasso.next_class(cls);
      const auto& succ = k.states[state].successors;
      bool descended = false;
      while (cursor < succ.size()) {
        std::uint32_t next = succ[cursor++];
        if (!matches(next, next_cls)) continue;
        std::size_t target = next_cls * k.states.size() + next;
        if (color[target] == 1) return true;
        if (color[target] == 0) {
          stack.back().second = cursor;
          color[target] = 1;
          stack.emplace_back(target, 0);
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

KripkeStructure kripke_from_lasso(const Lasso& lasso) {
  KripkeStructure k;
  for (const auto& [atom, w] : lasso.letter(0).entries()) k.atoms.push_back(atom);
  for (std::size_t c = 0; c < lasso.classes(); ++c) {
    const Letter& l = lasso.letter(c);
    for (const std::string& atom : k.atoms) {
      if (!l.assigns(atom)) throw ModelError("lasso letters assign different atom sets");
    }
    if (l.entries().size() != k.atoms.size()) {
      throw ModelError("lasso letters assign different atom sets");
    }
    KripkeState s;
    s.name = "n" + std::to_string(c);
    s.initial = c == 0;
    s.label = l;
    s.successors.push_back(
        static_cast<std::uint32_t>(c + 1 < lasso.classes() ? c + 1 : lasso.prefix.size()));
    k.states.push_back(std::move(s));
  }
  return k;
}

}  // namespace dltl
