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

#include "lexsafe/oracle.hpp"

#include <set>
#include <type_traits>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> numbered(int p) {
  std::vector<std::string> out;
  out.reserve(p);
  for (int i = 1; i <= p; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

int backend_outcomes(const Backend& b) {
  return std::visit(
      Overloaded{[](const PositionalStructure& g) { return g.outcome_count(); },
                 [](const JordanMap& m) { return m.area_count(); },
                 [](const VetoScheme& v) { return v.outcome_count(); },
                 [](const auto& f) { return f.outcome_count(); }},
      b);
}

}  // namespace

const char* backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::Explicit: return "explicit";
    case BackendKind::Monotone: return "monotone";
    case BackendKind::Positional: return "positional";
    case BackendKind::Jordan: return "jordan";
    case BackendKind::Bargaining: return "bargaining";
    case BackendKind::Veto: return "veto";
  }
  return "unknown";
}

std::vector<std::string> default_labels(const Backend& backend) {
  return std::visit(
      Overloaded{[](const PositionalStructure& g) { return g.outcomes().labels; },
                 [](const MbScheme& s) { return s.labels(); },
                 [&](const auto&) { return numbered(backend_outcomes(backend)); }},
      backend);
}

OracleInstance::OracleInstance(Backend backend, std::vector<std::string> labels)
    : backend_(std::move(backend)), labels_(std::move(labels)) {
  if (const auto* v = std::get_if<VetoScheme>(&backend_)) validate_scheme(*v);
  const int p = backend_outcomes(backend_);
  if (p < 1) throw InvalidInstance("instance has no outcomes");
  if (labels_.empty()) labels_ = default_labels(backend_);
  if (static_cast<int>(labels_.size()) != p) {
    throw InvalidInstance("instance has " + std::to_string(p) +
                          " outcomes but " + std::to_string(labels_.size()) +
                          " labels");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InvalidInstance("duplicate outcome label '" + l + "'");
  }
}

Pm1Result solve_pm1(const OracleInstance& oracle, const Pm1Partition& part) {
  if (part.universe_size() != oracle.outcome_count()) {
    throw InvalidInstance("partition does not cover the instance's outcomes");
  }
  return std::visit(
      Overloaded{
          [&](const ExplicitGameForm& f) { return solve_pm1_explicit(f, part); },
          [&](const MonotonePropertyForm& f) { return solve_pm1_monotone(f, part); },
          [&](const PositionalStructure& g) { return solve_pm1_positional(g, part); },
          [&](const JordanMap& m) { return solve_pm1_jordan(m, part); },
          [&](const MbScheme& s) { return solve_pm1_mb(s, part, oracle.mb_sweep()); },
          [&](const VetoScheme& v) { return solve_pm1_veto(v, part); }},
      oracle.backend());
}

EdgeAnswer contains_edge(const OracleInstance& oracle, const OutcomeSet& candidate,
                         Player side) {
  const Pm1Partition part = side == Player::Alice
                                ? Pm1Partition(candidate)
                                : Pm1Partition::from_bob(candidate);
  Pm1Result r = solve_pm1(oracle, part);
  return {r.winner == side, std::move(r)};
}

Pm1Result minimal_winning_strategy(const OracleInstance& oracle,
                                   const Pm1Partition& part) {
  Pm1Result best = solve_pm1(oracle, part);
  std::uint64_t queries = best.queries_used;
  const Player winner = best.winner;
  OutcomeSet own = part.winning_set(winner);
  for (OutcomeId w : own.members()) {
    OutcomeSet trial = own;
    trial.erase(w);
    EdgeAnswer a = contains_edge(oracle, trial, winner);
    queries += a.result.queries_used;
    if (a.contains) {
      own = std::move(trial);
      best = std::move(a.result);
    }
  }
  best.queries_used = queries;
  return best;
}

std::vector<StrategyHandle> enumerate_strategies(const OracleInstance& oracle,
                                                 Player player,
                                                 const ExpansionLimits& limits) {
  std::vector<StrategyHandle> out;
  auto wrap = [&](auto&& list) {
    for (auto& s : list) out.push_back({player, std::move(s)});
  };
  std::visit(
      Overloaded{
          [&](const ExplicitGameForm& f) {
            const int count = player == Player::Alice ? f.rows() : f.cols();
            for (int i = 0; i < count; ++i) out.push_back({player, ExplicitStrategy{i}});
          },
          [&](const MonotonePropertyForm& f) {
            const auto sets = player == Player::Alice
                                  ? f.generators()
                                  : minimal_transversals(f, limits.monotone_outcomes);
            for (const auto& s : sets) out.push_back({player, SetStrategy{s}});
          },
          [&](const PositionalStructure& g) {
            wrap(enumerate_positional_strategies(g, player, limits.positional));
          },
          [&](const JordanMap& m) {
            for (auto& s : enumerate_connectors(m, player, limits.jordan_areas)) {
              out.push_back({player, SetStrategy{std::move(s)}});
            }
          },
          [&](const MbScheme& s) {
            wrap(enumerate_monotone_maps(s, player, limits.bargaining));
          },
          [&](const VetoScheme& v) {
            wrap(enumerate_distributions(v, player, limits.veto));
          }},
      oracle.backend());
  return out;
}

OutcomeId outcome_of(const OracleInstance& oracle, const StrategyHandle& x,
                     const StrategyHandle& y) {
  if (x.owner != Player::Alice || y.owner != Player::Bob) {
    throw InvalidInstance("outcome_of expects Alice's and Bob's strategies");
  }
  auto payload = [&]<class T>(const StrategyHandle& h, std::type_identity<T>) -> const T& {
    const T* p = std::get_if<T>(&h.payload);
    if (p == nullptr) {
      throw InvalidInstance(std::string("strategy payload does not match the ") +
                            backend_name(oracle.kind()) + " backend");
    }
    return *p;
  };
  auto sets_meet = [&](const OutcomeSet& a, const OutcomeSet& b) {
    const OutcomeId w = (a & b).first();
    if (w < 0) throw InvalidMap("strategies of Alice and Bob do not meet");
    return w;
  };
  return std::visit(
      Overloaded{
          [&](const ExplicitGameForm& f) {
            const auto& a = payload(x, std::type_identity<ExplicitStrategy>{});
            const auto& b = payload(y, std::type_identity<ExplicitStrategy>{});
            if (a.index < 0 || a.index >= f.rows() || b.index < 0 || b.index >= f.cols()) {
              throw InvalidInstance("strategy index out of range");
            }
            return f(a.index, b.index);
          },
          [&](const MonotonePropertyForm&) {
            return sets_meet(payload(x, std::type_identity<SetStrategy>{}).outcomes,
                             payload(y, std::type_identity<SetStrategy>{}).outcomes);
          },
          [&](const PositionalStructure& g) {
            return play(g, payload(x, std::type_identity<PositionalStrategy>{}),
                        payload(y, std::type_identity<PositionalStrategy>{}));
          },
          [&](const JordanMap&) {
            return sets_meet(payload(x, std::type_identity<SetStrategy>{}).outcomes,
                             payload(y, std::type_identity<SetStrategy>{}).outcomes);
          },
          [&](const MbScheme& s) {
            return deal(s, payload(x, std::type_identity<MonotoneMap>{}),
                        payload(y, std::type_identity<MonotoneMap>{}));
          },
          [&](const VetoScheme& v) {
            return elect(v, payload(x, std::type_identity<CardDistribution>{}),
                         payload(y, std::type_identity<CardDistribution>{}));
          }},
      oracle.backend());
}

ExplicitGameForm expand(const OracleInstance& oracle, const ExpansionLimits& limits) {
  if (const auto* f = std::get_if<ExplicitGameForm>(&oracle.backend())) return *f;
  const auto rows = enumerate_strategies(oracle, Player::Alice, limits);
  const auto cols = enumerate_strategies(oracle, Player::Bob, limits);
  if (rows.empty() || cols.empty()) {
    throw InvalidInstance("a player has no strategies");
  }
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = outcome_of(oracle, rows[i], cols[j]);
    }
  }
  return ExplicitGameForm(std::move(cells), oracle.outcome_count());
}

OutcomeSet strategy_support(const OracleInstance& oracle,
                            const StrategyHandle& strategy,
                            const ExpansionLimits& limits) {
  if (const auto* f = std::get_if<ExplicitGameForm>(&oracle.backend())) {
    const auto* s = std::get_if<ExplicitStrategy>(&strategy.payload);
    if (s == nullptr) throw InvalidInstance("expected a row or column index");
    const int count = strategy.owner == Player::Alice ? f->rows() : f->cols();
    if (s->index < 0 || s->index >= count) {
      throw InvalidInstance("strategy index out of range");
    }
    return f->support(strategy.owner, s->index);
  }
  OutcomeSet out(oracle.outcome_count());
  for (const auto& other : enumerate_strategies(oracle, opponent(strategy.owner), limits)) {
    out.insert(strategy.owner == Player::Alice ? outcome_of(oracle, strategy, other)
                                               : outcome_of(oracle, other, strategy));
  }
  return out;
}

}  // namespace lexsafe
