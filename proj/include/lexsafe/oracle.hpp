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

#ifndef LEXSAFE_ORACLE_HPP_
#define LEXSAFE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lexsafe/bargaining.hpp"
#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/jordan.hpp"
#include "lexsafe/monotone_form.hpp"
#include "lexsafe/positional.hpp"
#include "lexsafe/strategy.hpp"
#include "lexsafe/veto.hpp"

namespace lexsafe {

enum class BackendKind { Explicit, Monotone, Positional, Jordan, Bargaining, Veto };

const char* backend_name(BackendKind kind);

using Backend = std::variant<ExplicitGameForm, MonotonePropertyForm,
                             PositionalStructure, JordanMap, MbScheme, VetoScheme>;

/// Caps on the strategy lists built by expand().
struct ExpansionLimits {
  std::size_t positional = kDefaultPositionalLimit;
  int jordan_areas = kDefaultJordanExpansionLimit;
  std::size_t bargaining = kDefaultMbLimit;
  std::size_t veto = kDefaultVetoLimit;
  int monotone_outcomes = kDefaultMonotoneExpansionLimit;
};

/// One game form given through its +-1 game solver, with an explicit list
/// of outcome labels.
class OracleInstance {
 public:
  /// Labels default to the backend's natural names ("w1".."wp" for forms
  /// without their own naming). Throws InvalidInstance on a label count
  /// mismatch, a duplicate label, or an invalid veto scheme.
  explicit OracleInstance(Backend backend, std::vector<std::string> labels = {});

  BackendKind kind() const { return static_cast<BackendKind>(backend_.index()); }
  const Backend& backend() const { return backend_; }
  template <class T>
  const T& as() const {
    return std::get<T>(backend_);
  }

  int outcome_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Which greedy sweep the bargaining backend runs.
  MbSweep mb_sweep() const { return mb_sweep_; }
  void set_mb_sweep(MbSweep sweep) { mb_sweep_ = sweep; }

 private:
  Backend backend_;
  std::vector<std::string> labels_;
  MbSweep mb_sweep_ = MbSweep::OneSided;
};

/// Natural labels of a backend.
std::vector<std::string> default_labels(const Backend& backend);

Pm1Result solve_pm1(const OracleInstance& oracle, const Pm1Partition& part);

struct EdgeAnswer {
  bool contains = false;
  /// The solve that decided the answer. Its strategy belongs to `side`
  /// when `contains` is true and to the opponent otherwise.
  Pm1Result result;
};

/// Does `candidate` contain a support of one of `side`'s strategies, that
/// is, does `side` win the +-1 game in which it owns `candidate`?
EdgeAnswer contains_edge(const OracleInstance& oracle, const OutcomeSet& candidate,
                         Player side = Player::Alice);

/// Shrinks the winner's set one outcome at a time in ascending order,
/// keeping each removal the winner survives. queries_used counts every
/// solve.
Pm1Result minimal_winning_strategy(const OracleInstance& oracle,
                                   const Pm1Partition& part);

ExplicitGameForm expand(const OracleInstance& oracle,
                        const ExpansionLimits& limits = {});

/// Backend-native strategy list of a player, in the order of the rows or
/// columns of expand().
std::vector<StrategyHandle> enumerate_strategies(const OracleInstance& oracle,
                                                 Player player,
                                                 const ExpansionLimits& limits = {});

/// Outcome of a strategy pair under the backend's selection rule.
OutcomeId outcome_of(const OracleInstance& oracle, const StrategyHandle& x,
                     const StrategyHandle& y);

/// Support of a strategy in the expanded form: the outcomes it reaches
/// against every opponent strategy.
OutcomeSet strategy_support(const OracleInstance& oracle,
                            const StrategyHandle& strategy,
                            const ExpansionLimits& limits = {});

}  // namespace lexsafe

#endif  // LEXSAFE_ORACLE_HPP_
