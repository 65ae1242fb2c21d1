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

#ifndef LEXSAFE_STRATEGY_HPP_
#define LEXSAFE_STRATEGY_HPP_

#include <cstdint>
#include <variant>
#include <vector>

#include "lexsafe/core.hpp"

namespace lexsafe {

/// Row (Alice) or column (Bob) of an explicit matrix.
struct ExplicitStrategy {
  int index = 0;
  friend bool operator==(const ExplicitStrategy&,
                         const ExplicitStrategy&) = default;
};

/// A strategy that is itself a set of outcomes: a generator or transversal of
/// a monotone property, or a connector of areas on a Jordan map.
struct SetStrategy {
  OutcomeSet outcomes;
  friend bool operator==(const SetStrategy&, const SetStrategy&) = default;
};

/// Stationary move map on a digraph: move[v] is the successor chosen at v,
/// or -1 for vertices the owner does not control.
struct PositionalStrategy {
  std::vector<int> move;
  friend bool operator==(const PositionalStrategy&,
                         const PositionalStrategy&) = default;
};

/// Non-decreasing exchange map. For Alice image[i] is the 0-based index of
/// the Bob item offered for a_i; for Bob the roles swap.
struct MonotoneMap {
  Player owner = Player::Alice;
  std::vector<int> image;
  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// Veto cards placed on each candidate.
struct CardDistribution {
  Player owner = Player::Alice;
  std::vector<std::int64_t> cards;
  friend bool operator==(const CardDistribution&,
                         const CardDistribution&) = default;
};

using StrategyPayload = std::variant<ExplicitStrategy, SetStrategy,
                                     PositionalStrategy, MonotoneMap,
                                     CardDistribution>;

struct StrategyHandle {
  Player owner = Player::Alice;
  StrategyPayload payload;
  friend bool operator==(const StrategyHandle&,
                         const StrategyHandle&) = default;
};

/// Solution of one +-1 game: who wins and a strategy whose support lies in
/// the winner's outcome set.
struct Pm1Result {
  Player winner = Player::Alice;
  StrategyHandle strategy;
  std::uint64_t queries_used = 1;
};

}  // namespace lexsafe

#endif  // LEXSAFE_STRATEGY_HPP_
