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

#ifndef LEXSAFE_JORDAN_HPP_
#define LEXSAFE_JORDAN_HPP_

#include <array>
#include <utility>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

enum class Side { North = 0, East = 1, South = 2, West = 3 };

/// A square partitioned into areas. Alice connects West to East, Bob
/// connects North to South; outcomes are the areas.
///
/// Only the combinatorial data is stored. Planarity and the degree-3 border
/// condition cannot be checked from it, so solve_pm1_jordan verifies at
/// query time that exactly one player connects.
class JordanMap {
 public:
  JordanMap() = default;
  JordanMap(int area_count, const std::vector<std::pair<int, int>>& adjacency,
            std::array<std::vector<int>, 4> side_contacts);

  int area_count() const { return p_; }
  const std::vector<int>& neighbors(int area) const { return adj_[area]; }
  bool touches(int area, Side side) const {
    return touch_[static_cast<int>(side)].contains(area);
  }
  const OutcomeSet& contacts(Side side) const {
    return touch_[static_cast<int>(side)];
  }

 private:
  int p_ = 0;
  std::vector<std::vector<int>> adj_;
  std::array<OutcomeSet, 4> touch_;
};

/// Sides a player has to connect.
std::pair<Side, Side> connector_sides(Player player);

/// Areas of `within` reachable from its `from`-contacts.
OutcomeSet reach_from_side(const JordanMap& map, const OutcomeSet& within,
                           Side from);

bool connects(const JordanMap& map, const OutcomeSet& areas, Side from, Side to);

/// Deletes areas in ascending order while the two sides stay connected.
/// The result is inclusion-minimal.
OutcomeSet minimize_connector(const JordanMap& map, OutcomeSet areas, Side from,
                              Side to);

/// Breadth-first search for a North-South connection inside omega_b and a
/// West-East one inside omega_a. Throws InvalidMap unless exactly one
/// exists; the winner's connector is minimized.
Pm1Result solve_pm1_jordan(const JordanMap& map, const Pm1Partition& part);

constexpr int kDefaultJordanExpansionLimit = 12;

/// Inclusion-minimal connectors of `player`, by ascending bitmask.
std::vector<OutcomeSet> enumerate_connectors(
    const JordanMap& map, Player player,
    int max_areas = kDefaultJordanExpansionLimit);

/// G(x, y) = x & y for every pair of minimal connectors.
std::vector<std::vector<OutcomeSet>> jordan_correspondence(
    const JordanMap& map, int max_areas = kDefaultJordanExpansionLimit);

/// Selection of the correspondence by canonical minimum of each cell.
ExplicitGameForm expand_explicit_jordan(
    const JordanMap& map, int max_areas = kDefaultJordanExpansionLimit);

}  // namespace lexsafe

#endif  // LEXSAFE_JORDAN_HPP_
