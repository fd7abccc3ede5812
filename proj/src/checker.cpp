#include "dltl/checker.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>

#include "dltl/awa.hpp"
#include "dltl/errors.hpp"
#include "dltl/eval.hpp"

namespace dltl {

std::vector<Letter> boolean_alphabet(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > 16) throw ModelError("too many atoms for an explicit Boolean alphabet");
  std::vector<Letter> out;
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    std::vector<std::pair<std::string, Rational>> entries;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      entries.emplace_back(atoms[i], Rational((mask >> i) & 1u ? 1 : 0));
    }
    out.push_back(Letter(std::move(entries)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shared emptiness graph: automaton states, or automaton x structure pairs.
struct SearchGraph {
  struct Edge {
    std::uint32_t target;
    std::uint32_t letter;
  };
  std::vector<Letter> alphabet;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::uint8_t> accepting;
  std::vector<std::uint32_t> initial;
};

struct BlueFrame {
  std::uint32_t node;
  std::size_t cursor;
  std::uint32_t incoming;  // letter on the edge that reached this frame
};

// Iterative nested depth-first search.  The outer (blue) search explores in
// depth-first postorder; at each accepting postorder event the inner (red)
// search looks for a way back onto the blue stack, which closes an accepting
// cycle.  Nodes finished by some red search never need revisiting: were they
// able to reach a later blue stack, the earlier search would have found a
// cycle already.
std::optional<Lasso> find_accepting_lasso_graph(const SearchGraph& g) {
  const std::size_t n = g.edges.size();
  std::vector<std::uint8_t> blue(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<std::uint8_t> red(n, 0);
  std::vector<BlueFrame> stack;
  auto letters_of = [&g](const std::vector<std::uint32_t>& ids) {
    std::vector<Letter> out;
    out.reserve(ids.size());
    for (std::uint32_t id : ids) out.push_back(g.alphabet[id]);
    return out;
  };
  for (std::uint32_t start : g.initial) {
    if (blue[start]) continue;
    blue[start] = 1;
    stack.push_back({start, 0, 0});
    while (!stack.empty()) {
      BlueFrame& frame = stack.back();
      if (frame.cursor < g.edges[frame.node].size()) {
        SearchGraph::Edge edge = g.edges[frame.node][frame.cursor++];
        if (blue[edge.target] == 0) {
          blue[edge.target] = 1;
          stack.push_back({edge.target, 0, edge.letter});
        }
        continue;
      }
      const std::uint32_t w = frame.node;
      if (g.accepting[w]) {
        // Red search from w for any node still on the blue stack.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> parent_edge(
            n, {0xFFFFFFFFu, 0xFFFFFFFFu});
        std::vector<std::uint32_t> todo{w};
        std::optional<std::pair<std::uint32_t, std::uint32_t>> hit;  // (stack node, letter)
        std::uint32_t hit_from = 0;
        while (!todo.empty() && !hit) {
          std::uint32_t node = todo.back();
          todo.pop_back();
          for (const SearchGraph::Edge& edge : g.edges[node]) {
            if (blue[edge.target] == 1) {
              hit = {edge.target, edge.letter};
              hit_from = node;
              break;
            }
            if (!red[edge.target]) {
              red[edge.target] = 1;
              parent_edge[edge.target] = {node, edge.letter};
              todo.push_back(edge.target);
            }
          }
        }
        if (hit) {
          // Cycle: w ->red...-> hit_from ->(letter)-> u ->blue stack...-> w.
          std::vector<std::uint32_t> cycle;
          std::vector<std::uint32_t> back;
          for (std::uint32_t at = hit_from; at != w; at = parent_edge[at].first) {
            back.push_back(parent_edge[at].second);
          }
          cycle.assign(back.rbegin(), back.rend());
          cycle.push_back(hit->second);
          std::size_t u_pos = 0;
          while (stack[u_pos].node != hit->first) ++u_pos;
          for (std::size_t i = u_pos + 1; i < stack.size(); ++i) {
            cycle.push_back(stack[i].incoming);
          }
          std::vector<std::uint32_t> prefix;
          for (std::size_t i = 1; i <= u_pos; ++i) prefix.push_back(stack[i].incoming);
          Lasso out;
          out.prefix = letters_of(prefix);
          out.period = letters_of(cycle);
          return out;
        }
        red[w] = 1;
      }
      blue[w] = 2;
      stack.pop_back();
    }
  }
  return std::nullopt;
}

SearchGraph graph_of_nba(const Nba& nba) {
  SearchGraph g;
  g.alphabet = nba.alphabet;
  g.edges.resize(nba.states.size());
  g.accepting.assign(nba.states.size(), 0);
  for (NbaStateId q = 0; q < nba.states.size(); ++q) {
    g.accepting[q] = nba.accepting[q] ? 1 : 0;
    for (std::uint32_t l = 0; l < nba.alphabet.size(); ++l) {
      for (NbaStateId succ : nba.transitions[q][l]) {
        g.edges[q].push_back({succ, l});
      }
    }
  }
  g.initial.push_back(nba.initial);
  return g;
}

// Product of the automaton with the structure: a node pairs an automaton
// state with a structure state; the automaton reads the structure state's
// label, then both advance.
SearchGraph graph_of_product(const Nba& nba, const KripkeStructure& k) {
  SearchGraph g;
  g.alphabet = nba.alphabet;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::pair<NbaStateId, std::uint32_t>> nodes;
  auto intern = [&](NbaStateId q, std::uint32_t s) {
    std::uint64_t key = (static_cast<std::uint64_t>(q) << 32) | s;
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
    index.emplace(key, id);
    nodes.emplace_back(q, s);
    g.edges.emplace_back();
    g.accepting.push_back(nba.accepting[q] ? 1 : 0);
    return id;
  };
  for (std::uint32_t s : k.initial_states()) g.initial.push_back(intern(nba.initial, s));
  for (std::uint32_t at = 0; at < nodes.size(); ++at) {
    auto [q, s] = nodes[at];
    std::uint32_t letter = static_cast<std::uint32_t>(nba.letter_index(k.states[s].label));
    for (NbaStateId q_next : nba.transitions[q][letter]) {
      for (std::uint32_t s_next : k.states[s].successors) {
        std::uint32_t target = intern(q_next, s_next);
        g.edges[at].push_back({target, letter});
      }
    }
  }
  return g;
}

// Greedy cosmetic shortening: drop single letters while the lasso still
// passes the caller's acceptance predicate.
Lasso shorten(Lasso lasso, const std::function<bool(const Lasso&)>& keeps) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < lasso.prefix.size(); ++i) {
      Lasso candidate = lasso;
      candidate.prefix.erase(candidate.prefix.begin() + static_cast<std::ptrdiff_t>(i));
      if (keeps(candidate)) {
        lasso = std::move(candidate);
        improved = true;
        break;
      }
    }
    if (improved) continue;
    if (lasso.period.size() > 1) {
      for (std::size_t i = 0; i < lasso.period.size(); ++i) {
        Lasso candidate = lasso;
        candidate.period.erase(candidate.period.begin() + static_cast<std::ptrdiff_t>(i));
        if (keeps(candidate)) {
          lasso = std::move(candidate);
          improved = true;
          break;
        }
      }
    }
  }
  return lasso;
}

}  // namespace

std::optional<Lasso> find_accepting_lasso(const Nba& nba) {
  return find_accepting_lasso_graph(graph_of_nba(nba));
}

CheckVerdict check_at_least(FormulaFactory& factory, const KripkeStructure& k, FormulaId phi,
                            const Rational& v) {
  if (!v.in_unit_interval()) throw ModelError("threshold " + v.str() + " outside [0,1]");
  std::vector<std::string> declared = k.atoms;
  std::sort(declared.begin(), declared.end());
  for (const std::string& atom : factory.atoms(phi)) {
    if (!std::binary_search(declared.begin(), declared.end(), atom)) {
      throw ModelError("atom '" + atom + "' is not declared by the structure");
    }
  }
  FormulaId negated = factory.make_not(phi);
  Awa awa = build_awa(factory, negated, Cmp::Greater, Rational(1) - v, k.alphabet());
  Nba nba = awa_to_nba(factory, awa);
  std::optional<Lasso> witness = find_accepting_lasso_graph(graph_of_product(nba, k));
  CheckVerdict verdict;
  if (!witness) {
    verdict.holds = true;
    return verdict;
  }
  Lasso lasso = shorten(std::move(*witness), [&](const Lasso& candidate) {
    return realizes(k, candidate) && nba_membership(nba, candidate);
  });
  if (!realizes(k, lasso)) {
    throw ConsistencyError("counterexample is not a computation of the structure");
  }
  Rational value = eval_lasso(factory, phi, lasso);
  if (!(value < v)) {
    throw ConsistencyError("counterexample value " + value.str() + " is not below " + v.str());
  }
  verdict.holds = false;
  verdict.counterexample = std::move(lasso);
  verdict.counterexample_value = std::move(value);
  return verdict;
}

std::optional<Lasso> satisfiable_above(FormulaFactory& factory, FormulaId phi, const Rational& v,
                                       std::vector<Letter> alphabet) {
  if (!v.in_unit_interval()) throw ModelError("threshold " + v.str() + " outside [0,1]");
  Awa awa = build_awa(factory, phi, Cmp::Greater, v, std::move(alphabet));
  Nba nba = awa_to_nba(factory, awa);
  std::optional<Lasso> witness = find_accepting_lasso(nba);
  if (!witness) return std::nullopt;
  Lasso lasso = shorten(std::move(*witness),
                        [&](const Lasso& candidate) { return nba_membership(nba, candidate); });
  Rational value = eval_lasso(factory, phi, lasso);
  if (!(value > v)) {
    throw ConsistencyError("witness value " + value.str() + " is not above " + v.str());
  }
  return lasso;
}

ValueInterval approximate_value(FormulaFactory& factory, const KripkeStructure& k, FormulaId phi,
                                const Rational& epsilon) {
  if (!(epsilon > 0)) throw ModelError("epsilon must be positive");
  if (check_at_least(factory, k, phi, Rational(1)).holds) return {Rational(1), Rational(1)};
  ValueInterval interval{Rational(0), Rational(1)};
  while (interval.hi - interval.lo > epsilon) {
    Rational mid = (interval.lo + interval.hi) / Rational(2);
    if (check_at_least(factory, k, phi, mid).holds) {
      interval.lo = mid;
    } else {
      interval.hi = mid;
    }
  }
  return interval;
}

}  // namespace dltl
