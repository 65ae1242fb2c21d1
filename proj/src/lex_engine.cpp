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

#include "lexsafe/lex_engine.hpp"

#include <optional>
#include <vector>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

class Querier {
 public:
  Querier(const OracleInstance& oracle, Player side) : oracle_(oracle), side_(side) {}

  bool ask(const OutcomeSet& s) {
    EdgeAnswer a = contains_edge(oracle_, s, side_);
    count_ += a.result.queries_used;
    if (a.contains) last_ = std::move(a.result.strategy);
    return a.contains;
  }

  std::uint64_t count() const { return count_; }
  std::optional<StrategyHandle>& last() { return last_; }

 private:
  const OracleInstance& oracle_;
  Player side_;
  std::uint64_t count_ = 0;
  std::optional<StrategyHandle> last_;
};

}  // namespace

SupportSearch lexmax_support(const OracleInstance& oracle, const Preference& pref,
                             Player player, const LexOptions& options) {
  const int p = oracle.outcome_count();
  if (pref.size() != p) throw InvalidInstance("preference size does not match the instance");
  const auto& order = pref.worst_to_best();
  Querier q(oracle, player);

  // Outcomes order[t..p-1].
  auto tail_from = [&](const OutcomeSet& k, int t) {
    OutcomeSet s = k;
    for (int i = t; i < p; ++i) s.insert(order[i]);
    return s;
  };

  OutcomeSet k(p);
  // Invariant: k + order[s..] contains an edge; q.last() witnesses it once
  // any query has been positive.
  int s = 0;
  while (s < p) {
    int largest = s;
    if (options.dichotomy) {
      int hi = p + 1;
      while (hi - largest > 1) {
        const int mid = largest + (hi - largest) / 2;
        if (q.ask(tail_from(k, mid))) {
          largest = mid;
        } else {
          hi = mid;
        }
      }
    } else {
      for (int t = s + 1; t <= p && q.ask(tail_from(k, t)); ++t) largest = t;
    }
    if (largest == p) break;
    k.insert(order[largest]);
    s = largest + 1;
  }
  // The last positive answer was on k itself; only an all-negative run
  // leaves k = Omega unasked.
  if (!q.last().has_value() && !q.ask(k)) {
    throw InternalError("no strategy support fits in the full outcome set");
  }
  return {k, *q.last(), q.count()};
}

SupportSearch complement_edge(const OracleInstance& oracle, const OutcomeSet& a_l,
                              OutcomeId omega_star, const Preference& pref,
                              Player player) {
  const int p = oracle.outcome_count();
  if (a_l.universe_size() != p || pref.size() != p) {
    throw InvalidInstance("support or preference size does not match the instance");
  }
  if (!a_l.contains(omega_star)) {
    throw InvalidInstance("omega* is not in the lexmax support");
  }
  OutcomeSet b = OutcomeSet::full(p) - a_l;
  b.insert(omega_star);
  for (int r = pref.rank(omega_star) + 1; r < p; ++r) b.erase(pref.at_rank(r));

  Querier q(oracle, opponent(player));
  if (!q.ask(b)) {
    throw InternalError("opponent cannot stay inside the complement of the lexmax support");
  }
  for (OutcomeId w : b.members()) {
    OutcomeSet trial = b;
    trial.erase(w);
    if (q.ask(trial)) b = std::move(trial);
  }
  return {b, *q.last(), q.count()};
}

LexsafeNe lexsafe_ne(const OracleInstance& oracle, const Preference& pref_own,
                     const Preference& pref_other, Player player,
                     const LexOptions& options) {
  SupportSearch own = lexmax_support(oracle, pref_own, player, options);
  const OutcomeId star = pref_max(own.support, pref_other);
  SupportSearch other = complement_edge(oracle, own.support, star, pref_own, player);
  LexsafeNe ne;
  ne.player = player;
  ne.support_own = std::move(own.support);
  ne.support_other = std::move(other.support);
  ne.ne_outcome = star;
  ne.lexmax_queries = own.queries_used;
  ne.complement_queries = other.queries_used;
  if (player == Player::Alice) {
    ne.x_strategy = std::move(own.witness);
    ne.y_strategy = std::move(other.witness);
  } else {
    ne.x_strategy = std::move(other.witness);
    ne.y_strategy = std::move(own.witness);
  }
  return ne;
}

bool certify_ne(const LexsafeNe& ne, const Preference& pref_a,
                const Preference& pref_b) {
  const int p = ne.support_own.universe_size();
  if (ne.support_other.universe_size() != p || pref_a.size() != p ||
      pref_b.size() != p || ne.ne_outcome < 0 || ne.ne_outcome >= p) {
    return false;
  }
  const Preference& own = ne.player == Player::Alice ? pref_a : pref_b;
  const Preference& other = ne.player == Player::Alice ? pref_b : pref_a;
  if ((ne.support_own & ne.support_other) != OutcomeSet(p, {ne.ne_outcome})) {
    return false;
  }
  return pref_max(ne.support_own, other) == ne.ne_outcome &&
         pref_max(ne.support_other, own) == ne.ne_outcome;
}

}  // namespace lexsafe
