// Copyright 2026 The lexsafe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXSAFE_LEX_ENGINE_HPP_
#define LEXSAFE_LEX_ENGINE_HPP_

#include <cstdint>

#include "lexsafe/core.hpp"
#include "lexsafe/oracle.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

struct LexOptions {
  /// Binary search for the next confirmed outcome instead of a linear scan.
  bool dichotomy = false;
};

struct SupportSearch {
  OutcomeSet support;
  StrategyHandle witness;
  std::uint64_t queries_used = 0;
};

/// The lexmax support of `player` under `pref`, found by containment
/// queries only. Confirms outcomes from the worst upward; each round asks
/// K + {w_(t), ..., w_(p)} for growing t and stops at the first negative
/// answer. Uses at most p(p+1)/2 + 1 queries without dichotomy.
SupportSearch lexmax_support(const OracleInstance& oracle, const Preference& pref,
                             Player player = Player::Alice,
                             const LexOptions& options = {});

/// The opponent's support meeting `a_l` in `omega_star` only, with every
/// other element worse than `omega_star` under `pref`. Starts from
/// Omega minus (a_l - {omega_star}) minus everything better than
/// omega_star and deletes outcomes in ascending order while the opponent
/// still wins. Throws InternalError if the start set is not winning for
/// the opponent. Uses at most p + 1 queries.
SupportSearch complement_edge(const OracleInstance& oracle, const OutcomeSet& a_l,
                              OutcomeId omega_star, const Preference& pref,
                              Player player = Player::Alice);

/// A lexsafe equilibrium from one player's box.
struct LexsafeNe {
  Player player = Player::Alice;
  StrategyHandle x_strategy;  ///< Alice's strategy.
  StrategyHandle y_strategy;  ///< Bob's strategy.
  OutcomeSet support_own;     ///< Lexmax support of `player`.
  OutcomeSet support_other;   ///< Complementary support of the opponent.
  OutcomeId ne_outcome = -1;
  std::uint64_t lexmax_queries = 0;
  std::uint64_t complement_queries = 0;

  std::uint64_t queries_used() const { return lexmax_queries + complement_queries; }
};

LexsafeNe lexsafe_ne(const OracleInstance& oracle, const Preference& pref_own,
                     const Preference& pref_other, Player player,
                     const LexOptions& options = {});

/// support_own & support_other == {ne_outcome}, ne_outcome is the
/// opponent's favourite in support_own and the player's favourite in
/// support_other.
bool certify_ne(const LexsafeNe& ne, const Preference& pref_a,
                const Preference& pref_b);

}  // namespace lexsafe

#endif  // LEXSAFE_LEX_ENGINE_HPP_
