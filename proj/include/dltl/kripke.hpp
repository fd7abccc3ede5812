#pragma once
// ============================================================================
// kripke.hpp
//
// Weighted Kripke structures.  Every state carries a total weight assignment
// over the declared atoms (a Letter) and at least one successor, so every
// state starts some infinite computation.  Text format, one directive per
// line, '#' comments:
//
//   aps: p q
//   state: s0 init p=1 q=0
//   state: s1 p=1/2 q=1
//   trans: s0 s1
//
// Weights are exact rationals in [0,1]; plain Boolean models use 0 and 1.
// ============================================================================

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dltl/lasso.hpp"

namespace dltl {

struct KripkeState {
  std::string name;
  bool initial = false;
  Letter label;
  std::vector<std::uint32_t> successors;  // sorted, unique
};

struct KripkeStructure {
  std::vector<std::string> atoms;   // declared order
  std::vector<KripkeState> states;  // declared order

  // Distinct state labels in canonical (sorted) order.
  std::vector<Letter> alphabet() const;

  std::vector<std::uint32_t> initial_states() const;
};

// Parses and validates: unknown states in transitions, missing or duplicate
// weight assignments, out-of-range weights, states without successors and
// missing initial states are all ModelError/ParseError.
KripkeStructure load_kripke(std::string_view text);

// All lassos u·v^ω realizable from an initial state with |u| <= max_prefix
// and 1 <= |v| <= max_period, where the v-cycle closes in the state graph.
// Duplicates (same letter sequences) are removed; order is deterministic.
std::vector<Lasso> enumerate_lassos(const KripkeStructure& k, std::size_t max_prefix,
                                    std::size_t max_period);

// True when the lasso's letter sequence labels some infinite path from an
// initial state.
bool realizes(const KripkeStructure& k, const Lasso& lasso);

// A degenerate structure whose unique computation is exactly the lasso.
KripkeStructure kripke_from_lasso(const Lasso& lasso);

}  // namespace dltl
