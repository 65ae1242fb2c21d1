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

#include "lexsafe/positional.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

// Iterative Tarjan. Components are numbered in completion order, which is a
// reverse topological order of the condensation.
std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& succ, int* count) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next arc)
  int next_index = 0;
  int next_comp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, arc] = call.back();
      if (arc == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (arc < succ[v].size()) {
        const int w = succ[v][arc++];
        if (index[w] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  *count = next_comp;
  return comp;
}

}  // namespace

SccOutcomeMap decompose(const std::vector<VertexOwner>& owners,
                        const std::vector<std::vector<int>>& successors,
                        int initial, PositionalMode mode,
                        const std::vector<std::string>& names) {
  const int n = static_cast<int>(owners.size());
  SccOutcomeMap out;
  out.component = strongly_connected_components(successors, &out.component_count);
  out.cyclic.assign(out.component_count, false);
  for (int v = 0; v < n; ++v) {
    for (int w : successors[v]) {
      if (out.component[w] == out.component[v]) out.cyclic[out.component[v]] = true;
    }
  }

  std::vector<bool> reached(n, false);
  std::deque<int> queue{initial};
  reached[initial] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : successors[v]) {
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!reached[v]) out.unreachable.push_back(v);
  }

  out.outcome_of_component.assign(out.component_count, -1);
  for (int v = 0; v < n; ++v) {
    if (owners[v] == VertexOwner::Terminal && reached[v]) {
      out.outcome_of_component[out.component[v]] = out.outcome_count();
      out.representative.push_back(v);
      out.labels.push_back(names[v]);
    }
  }
  int merged = -1;
  for (int v = 0; v < n; ++v) {
    const int c = out.component[v];
    if (!reached[v] || !out.cyclic[c] || out.outcome_of_component[c] != -1) {
      continue;
    }
    if (mode == PositionalMode::Msdggs) {
      out.outcome_of_component[c] = out.outcome_count();
      out.representative.push_back(v);
      out.labels.push_back("cycle:" + names[v]);
    } else {
      if (merged == -1) {
        merged = out.outcome_count();
        out.representative.push_back(-1);
        out.labels.push_back("c");
      }
      out.outcome_of_component[c] = merged;
    }
  }
  return out;
}

PositionalStructure::PositionalStructure(
    std::vector<VertexOwner> owners, std::vector<std::vector<int>> successors,
    int initial, PositionalMode mode, std::vector<std::string> names)
    : owners_(std::move(owners)),
      successors_(std::move(successors)),
      initial_(initial),
      mode_(mode),
      names_(std::move(names)) {
  const int n = vertex_count();
  if (n == 0) throw InvalidInstance("positional structure has no vertices");
  if (static_cast<int>(successors_.size()) != n) {
    throw InvalidInstance("successor lists do not match the vertex count");
  }
  if (names_.empty()) {
    for (int v = 0; v < n; ++v) names_.push_back("v" + std::to_string(v));
  }
  if (static_cast<int>(names_.size()) != n) {
    throw InvalidInstance("vertex names do not match the vertex count");
  }
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size()) {
    throw InvalidInstance("duplicate vertex name");
  }
  if (initial_ < 0 || initial_ >= n) {
    throw InvalidInstance("initial vertex out of range");
  }
  if (owners_[initial_] == VertexOwner::Terminal) {
    throw InvalidInstance("initial vertex '" + names_[initial_] +
                          "' is terminal");
  }
  for (int v = 0; v < n; ++v) {
    for (int w : successors_[v]) {
      if (w < 0 || w >= n) {
        throw InvalidInstance("arc from '" + names_[v] + "' to a missing vertex");
      }
    }
    const bool terminal = owners_[v] == VertexOwner::Terminal;
    if (terminal && !successors_[v].empty()) {
      throw InvalidInstance("terminal vertex '" + names_[v] + "' has moves");
    }
    if (!terminal && successors_[v].empty()) {
      throw InvalidInstance("vertex '" + names_[v] +
                            "' has no moves but is not terminal");
    }
  }
  scc_ = decompose(owners_, successors_, initial_, mode_, names_);
}

namespace {

Player controller(VertexOwner o) {
  return o == VertexOwner::Alice ? Player::Alice : Player::Bob;
}

}  // namespace

Pm1Result solve_pm1_positional(const PositionalStructure& g,
                               const Pm1Partition& part) {
  const SccOutcomeMap& scc = g.outcomes();
  if (part.universe_size() != scc.outcome_count()) {
    throw InvalidInstance("partition does not cover the structure's outcomes");
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> members(scc.component_count);
  for (int v = 0; v < n; ++v) members[scc.component[v]].push_back(v);

  // Outcome owner of a terminal or cycling SCC; unreachable ones never
  // influence the initial vertex, Alice is an arbitrary choice there.
  auto cycling_winner = [&](int c) {
    const int o = scc.outcome_of_component[c];
    return (o < 0 || part.alice_wins_on(o)) ? Player::Alice : Player::Bob;
  };

  std::vector<Player> win(n, Player::Alice);
  std::vector<int> move(n, -1);
  constexpr int kUnset = std::numeric_limits<int>::max();

  for (int c = 0; c < scc.component_count; ++c) {
    const auto& vs = members[c];
    if (vs.size() == 1 && g.owner(vs[0]) == VertexOwner::Terminal) {
      win[vs[0]] = cycling_winner(c);
      continue;
    }
    if (!scc.cyclic[c]) {
      const int v = vs[0];
      const Player who = controller(g.owner(v));
      win[v] = opponent(who);
      for (int s : g.successors(v)) {
        if (win[s] == who) {
          win[v] = who;
          move[v] = s;
          break;
        }
      }
      continue;
    }

    // Cyclic SCC: `keeper` wins by staying inside, `breaker` needs to
    // force an exit it already wins.
    const Player keeper = cycling_winner(c);
    const Player breaker = opponent(keeper);
    auto inside = [&](int w) { return scc.component[w] == c; };

    std::vector<int> stamp(n, kUnset);
    std::vector<int> pending(n, 0);
    std::vector<std::vector<int>> preds(n);
    std::deque<int> queue;
    int clock = 0;
    auto attract = [&](int v) {
      stamp[v] = ++clock;
      queue.push_back(v);
    };
    for (int v : vs) {
      const bool breaker_owns = controller(g.owner(v)) == breaker;
      bool exit_to_breaker = false;
      for (int s : g.successors(v)) {
        if (inside(s)) {
          preds[s].push_back(v);
          ++pending[v];
        } else if (win[s] == breaker) {
          exit_to_breaker = true;
        } else {
          ++pending[v];
        }
      }
      if (breaker_owns ? exit_to_breaker : pending[v] == 0) attract(v);
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : preds[u]) {
        if (stamp[v] != kUnset) continue;
        if (controller(g.owner(v)) == breaker || --pending[v] == 0) attract(v);
      }
    }

    for (int v : vs) {
      const bool attracted = stamp[v] != kUnset;
      win[v] = attracted ? breaker : keeper;
      if (controller(g.owner(v)) != win[v]) continue;
      for (int s : g.successors(v)) {
        const bool good =
            attracted ? (inside(s) ? stamp[s] < stamp[v] : win[s] == breaker)
                      : (inside(s) ? stamp[s] == kUnset : win[s] == keeper);
        if (good) {
          move[v] = s;
          break;
        }
      }
      if (move[v] == -1) throw InternalError("attractor move missing");
    }
  }

  const Player winner = win[g.initial()];
  PositionalStrategy strategy{std::vector<int>(n, -1)};
  for (int v = 0; v < n; ++v) {
    if (g.owner(v) == VertexOwner::Terminal || controller(g.owner(v)) != winner) {
      continue;
    }
    strategy.move[v] = (win[v] == winner && move[v] != -1) ? move[v]
                                                           : g.successors(v).front();
  }
  return {winner, {winner, std::move(strategy)}, 1};
}

OutcomeId play(const PositionalStructure& g, const PositionalStrategy& x,
               const PositionalStrategy& y) {
  const int n = g.vertex_count();
  if (static_cast<int>(x.move.size()) != n || static_cast<int>(y.move.size()) != n) {
    throw InvalidInstance("positional strategy size does not match the graph");
  }
  const SccOutcomeMap& scc = g.outcomes();
  std::vector<bool> visited(n, false);
  int pos = g.initial();
  while (true) {
    if (g.owner(pos) == VertexOwner::Terminal || visited[pos]) {
      return scc.outcome_of_component[scc.component[pos]];
    }
    visited[pos] = true;
    const int next = g.owner(pos) == VertexOwner::Alice ? x.move[pos] : y.move[pos];
    const auto& succ = g.successors(pos);
    if (std::find(succ.begin(), succ.end(), next) == succ.end()) {
      throw InvalidInstance("strategy moves along a missing arc at '" +
                            g.name(pos) + "'");
    }
    pos = next;
  }
}

std::vector<PositionalStrategy> enumerate_positional_strategies(
    const PositionalStructure& g, Player player, std::size_t limit) {
  const VertexOwner tag = player == Player::Alice ? VertexOwner::Alice : VertexOwner::Bob;
  std::vector<int> owned;
  std::size_t total = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.owner(v) != tag) continue;
    owned.push_back(v);
    total *= g.successors(v).size();
    if (total > limit) {
      throw SizeLimitExceeded(std::string(player_name(player)) +
                              " has more than " + std::to_string(limit) +
                              " positional strategies");
    }
  }
  std::vector<PositionalStrategy> out;
  out.reserve(total);
  std::vector<std::size_t> digit(owned.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    PositionalStrategy s{std::vector<int>(g.vertex_count(), -1)};
    for (std::size_t i = 0; i < owned.size(); ++i) {
      s.move[owned[i]] = g.successors(owned[i])[digit[i]];
    }
    out.push_back(std::move(s));
    for (std::size_t i = owned.size(); i-- > 0;) {
      if (++digit[i] < g.successors(owned[i]).size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

ExplicitGameForm expand_explicit(const PositionalStructure& g, std::size_t limit) {
  const auto rows = enumerate_positional_strategies(g, Player::Alice, limit);
  const auto cols = enumerate_positional_strategies(g, Player::Bob, limit);
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = play(g, rows[i], cols[j]);
    }
  }
  return ExplicitGameForm(std::move(cells), g.outcome_count());
}

}  // namespace lexsafe
