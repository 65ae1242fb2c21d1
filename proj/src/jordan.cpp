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

#include "lexsafe/jordan.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

const char* side_name(int s) {
  static constexpr const char* kNames[] = {"N", "E", "S", "W"};
  return kNames[s];
}

}  // namespace

JordanMap::JordanMap(int area_count,
                     const std::vector<std::pair<int, int>>& adjacency,
                     std::array<std::vector<int>, 4> side_contacts)
    : p_(area_count), adj_(area_count) {
  if (p_ < 1) throw InvalidInstance("map needs at least one area");
  for (auto [a, b] : adjacency) {
    if (a < 0 || a >= p_ || b < 0 || b >= p_) {
      throw InvalidInstance("adjacency refers to a missing area");
    }
    if (a == b) throw InvalidInstance("area adjacent to itself");
    if (std::find(adj_[a].begin(), adj_[a].end(), b) == adj_[a].end()) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  for (int s = 0; s < 4; ++s) {
    touch_[s] = OutcomeSet(p_);
    for (int a : side_contacts[s]) {
      if (a < 0 || a >= p_) {
        throw InvalidInstance(std::string("side ") + side_name(s) +
                              " lists a missing area");
      }
      touch_[s].insert(a);
    }
    if (touch_[s].empty()) {
      throw InvalidInstance(std::string("side ") + side_name(s) +
                            " touches no area");
    }
  }
}

std::pair<Side, Side> connector_sides(Player player) {
  return player == Player::Alice ? std::pair{Side::West, Side::East}
                                 : std::pair{Side::North, Side::South};
}

OutcomeSet reach_from_side(const JordanMap& map, const OutcomeSet& within,
                           Side from) {
  OutcomeSet seen = map.contacts(from) & within;
  std::deque<int> queue;
  for (int a : seen.members()) queue.push_back(a);
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int b : map.neighbors(a)) {
      if (within.contains(b) && !seen.contains(b)) {
        seen.insert(b);
        queue.push_back(b);
      }
    }
  }
  return seen;
}

bool connects(const JordanMap& map, const OutcomeSet& areas, Side from, Side to) {
  return reach_from_side(map, areas, from).intersects(map.contacts(to));
}

OutcomeSet minimize_connector(const JordanMap& map, OutcomeSet areas, Side from,
                              Side to) {
  for (int a : areas.members()) {
    areas.erase(a);
    if (!connects(map, areas, from, to)) areas.insert(a);
  }
  return areas;
}

Pm1Result solve_pm1_jordan(const JordanMap& map, const Pm1Partition& part) {
  if (part.universe_size() != map.area_count()) {
    throw InvalidInstance("partition does not cover the map's areas");
  }
  const OutcomeSet omega_b = part.omega_b();
  const OutcomeSet bob_reach = reach_from_side(map, omega_b, Side::North);
  const bool bob = bob_reach.intersects(map.contacts(Side::South));
  const OutcomeSet alice_reach = reach_from_side(map, part.omega_a(), Side::West);
  const bool alice = alice_reach.intersects(map.contacts(Side::East));
  if (alice == bob) {
    throw InvalidMap(alice ? "both players connect their sides on this map"
                           : "neither player connects their sides on this map");
  }
  if (bob) {
    return {Player::Bob,
            {Player::Bob,
             SetStrategy{minimize_connector(map, bob_reach, Side::North,
                                            Side::South)}},
            1};
  }
  return {Player::Alice,
          {Player::Alice,
           SetStrategy{minimize_connector(map, alice_reach, Side::West,
                                          Side::East)}},
          1};
}

std::vector<OutcomeSet> enumerate_connectors(const JordanMap& map, Player player,
                                             int max_areas) {
  const int p = map.area_count();
  if (p > max_areas || p > 62) {
    throw SizeLimitExceeded("Jordan expansion limited to " +
                            std::to_string(max_areas) + " areas");
  }
  const auto [from, to] = connector_sides(player);
  std::vector<OutcomeSet> out;
  const std::uint64_t total = std::uint64_t{1} << p;
  for (std::uint64_t m = 1; m < total; ++m) {
    const OutcomeSet s = OutcomeSet::from_mask(p, m);
    if (!connects(map, s, from, to)) continue;
    bool minimal = true;
    for (int a : s.members()) {
      OutcomeSet t = s;
      t.erase(a);
      if (connects(map, t, from, to)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<OutcomeSet>> jordan_correspondence(const JordanMap& map,
                                                           int max_areas) {
  const auto rows = enumerate_connectors(map, Player::Alice, max_areas);
  const auto cols = enumerate_connectors(map, Player::Bob, max_areas);
  if (rows.empty() || cols.empty()) {
    throw InvalidMap("a player has no connector on this map");
  }
  std::vector<std::vector<OutcomeSet>> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& col : cols) {
      OutcomeSet cell = rows[i] & col;
      if (cell.empty()) {
        throw InvalidMap("a West-East and a North-South connector are disjoint");
      }
      out[i].push_back(std::move(cell));
    }
  }
  return out;
}

ExplicitGameForm expand_explicit_jordan(const JordanMap& map, int max_areas) {
  const auto g = jordan_correspondence(map, max_areas);
  OutcomeMatrix cells(g.size(), g.front().size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g[i].size(); ++j) cells(i, j) = g[i][j].first();
  }
  return ExplicitGameForm(std::move(cells), map.area_count());
}

}  // namespace lexsafe
