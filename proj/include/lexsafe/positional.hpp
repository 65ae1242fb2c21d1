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

#ifndef LEXSAFE_POSITIONAL_HPP_
#define LEXSAFE_POSITIONAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

enum class VertexOwner { Alice, Bob, Terminal };

/// Dggs merges every infinite play into one outcome "c"; Msdggs keeps one
/// outcome per cyclic strongly connected component.
enum class PositionalMode { Dggs, Msdggs };

/// Outcomes derived from the SCC decomposition of a positional structure.
struct SccOutcomeMap {
  /// SCC id per vertex. Ids follow reverse topological order: every arc
  /// leaving an SCC points to an SCC with a smaller id.
  std::vector<int> component;
  int component_count = 0;
  /// Per SCC: true if it contains an arc (a cycle or a self-loop).
  std::vector<bool> cyclic;
  /// Per SCC: outcome index, or -1 for transient and unreachable SCCs.
  std::vector<int> outcome_of_component;
  /// Per outcome: the representative vertex (the terminal, or the smallest
  /// vertex of the cyclic SCC; -1 for the merged outcome "c").
  std::vector<int> representative;
  std::vector<std::string> labels;
  /// Vertices not reachable from the initial position.
  std::vector<int> unreachable;

  int outcome_count() const { return static_cast<int>(labels.size()); }
};

/// A finite digraph with positions owned by Alice, Bob or terminal.
class PositionalStructure {
 public:
  PositionalStructure() = default;
  /// Validates the structure and decomposes it. Throws InvalidInstance when
  /// terminals have moves, non-terminals have none, or an arc is dangling.
  PositionalStructure(std::vector<VertexOwner> owners,
                      std::vector<std::vector<int>> successors, int initial,
                      PositionalMode mode, std::vector<std::string> names = {});

  int vertex_count() const { return static_cast<int>(owners_.size()); }
  VertexOwner owner(int v) const { return owners_[v]; }
  const std::vector<int>& successors(int v) const { return successors_[v]; }
  int initial() const { return initial_; }
  PositionalMode mode() const { return mode_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  const SccOutcomeMap& outcomes() const { return scc_; }
  int outcome_count() const { return scc_.outcome_count(); }

 private:
  std::vector<VertexOwner> owners_;
  std::vector<std::vector<int>> successors_;
  int initial_ = 0;
  PositionalMode mode_ = PositionalMode::Msdggs;
  std::vector<std::string> names_;
  SccOutcomeMap scc_;
};

/// SCC decomposition and outcome numbering: terminals by vertex index, then
/// (Msdggs) cyclic SCCs by smallest vertex or (Dggs) the single outcome c.
/// Only parts reachable from the initial vertex become outcomes.
SccOutcomeMap decompose(const std::vector<VertexOwner>& owners,
                        const std::vector<std::vector<int>>& successors,
                        int initial, PositionalMode mode,
                        const std::vector<std::string>& names);

/// Solves a +-1 game by backward induction over the SCC condensation. A
/// cyclic SCC whose cycling outcome belongs to player P is won by P at
/// every vertex outside the opponent's attractor to opponent-won exits.
Pm1Result solve_pm1_positional(const PositionalStructure& g,
                               const Pm1Partition& part);

/// Outcome of the play from the initial vertex.
OutcomeId play(const PositionalStructure& g, const PositionalStrategy& x,
               const PositionalStrategy& y);

constexpr std::size_t kDefaultPositionalLimit = 4096;

/// All stationary strategies of `player`: moves chosen per owned vertex,
/// mixed radix with the lowest owned vertex most significant.
std::vector<PositionalStrategy> enumerate_positional_strategies(
    const PositionalStructure& g, Player player,
    std::size_t limit = kDefaultPositionalLimit);

ExplicitGameForm expand_explicit(const PositionalStructure& g,
                                 std::size_t limit = kDefaultPositionalLimit);

}  // namespace lexsafe

#endif  // LEXSAFE_POSITIONAL_HPP_
