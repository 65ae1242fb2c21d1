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

#ifndef LEXSAFE_MONOTONE_FORM_HPP_
#define LEXSAFE_MONOTONE_FORM_HPP_

#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

/// Game correspondence of a monotone property given by its minimal sets.
/// Alice's strategies are the generators, Bob's are the minimal
/// transversals of the generators, and G(x, y) = x & y.
class MonotonePropertyForm {
 public:
  MonotonePropertyForm() = default;
  /// Throws InvalidInstance if a generator is empty, contains another one,
  /// or the generators do not cover all p outcomes.
  MonotonePropertyForm(int outcome_count, std::vector<OutcomeSet> generators);

  int outcome_count() const { return p_; }
  const std::vector<OutcomeSet>& generators() const { return generators_; }
  /// Membership in the property: does `s` contain a generator?
  bool satisfies(const OutcomeSet& s) const;

 private:
  int p_ = 0;
  std::vector<OutcomeSet> generators_;
};

/// Alice wins iff a generator fits inside omega_a (the first one is the
/// witness); otherwise Bob wins with omega_b shrunk to a minimal
/// transversal.
Pm1Result solve_pm1_monotone(const MonotonePropertyForm& form,
                             const Pm1Partition& part);

constexpr int kDefaultMonotoneExpansionLimit = 20;

/// Minimal transversals, by ascending bitmask.
std::vector<OutcomeSet> minimal_transversals(
    const MonotonePropertyForm& form,
    int max_outcomes = kDefaultMonotoneExpansionLimit);

/// Rows are generators, columns minimal transversals; each cell holds the
/// canonical minimum of the intersection.
ExplicitGameForm expand_explicit_monotone(
    const MonotonePropertyForm& form,
    int max_outcomes = kDefaultMonotoneExpansionLimit);

}  // namespace lexsafe

#endif  // LEXSAFE_MONOTONE_FORM_HPP_
