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

#ifndef LEXSAFE_VETO_HPP_
#define LEXSAFE_VETO_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

/// Veto voting: Alice and Bob hold mu_a and mu_b veto cards, candidate w is
/// eliminated once it collects lambda[w] cards.
struct VetoScheme {
  std::int64_t mu_a = 1;
  std::int64_t mu_b = 1;
  std::vector<std::int64_t> lambda;

  int outcome_count() const { return static_cast<int>(lambda.size()); }
  std::int64_t budget(Player p) const { return p == Player::Alice ? mu_a : mu_b; }
};

constexpr std::int64_t kMaxVetoValue = 2147483647;

/// Throws InvalidInstance unless every value lies in [1, 2^31 - 1] and
/// mu_a + mu_b + 1 equals the sum of the resistances.
void validate_scheme(const VetoScheme& scheme);

/// Sum comparison only; runs in time linear in the number of candidates.
Pm1Result solve_pm1_veto(const VetoScheme& scheme, const Pm1Partition& part);

/// Candidates that survive the combined distributions.
OutcomeSet survivors(const VetoScheme& scheme, const CardDistribution& x,
                     const CardDistribution& y);

/// The elected candidate: the smallest-index survivor.
OutcomeId elect(const VetoScheme& scheme, const CardDistribution& x,
                const CardDistribution& y);

constexpr std::size_t kDefaultVetoLimit = 5000;

/// Compositions of the owner's budget into p parts, lexicographically
/// descending, so that the first rows put the whole budget on one candidate.
std::vector<CardDistribution> enumerate_distributions(
    const VetoScheme& scheme, Player player,
    std::size_t limit = kDefaultVetoLimit);

ExplicitGameForm expand_explicit_veto(const VetoScheme& scheme,
                                      std::size_t limit = kDefaultVetoLimit);

}  // namespace lexsafe

#endif  // LEXSAFE_VETO_HPP_
