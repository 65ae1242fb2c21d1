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

#include "lexsafe/monotone_form.hpp"

#include <string>

#include "lexsafe/errors.hpp"

namespace lexsafe {

MonotonePropertyForm::MonotonePropertyForm(int outcome_count,
                                           std::vector<OutcomeSet> generators)
    : p_(outcome_count), generators_(std::move(generators)) {
  if (p_ < 1) throw InvalidInstance("monotone form needs at least one outcome");
  if (generators_.empty()) {
    throw InvalidInstance("monotone form needs at least one generator");
  }
  OutcomeSet covered(p_);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const OutcomeSet& g = generators_[i];
    if (g.universe_size() != p_) {
      throw InvalidInstance("generator " + std::to_string(i) +
                            " is over the wrong universe");
    }
    if (g.empty()) {
      throw InvalidInstance("generator " + std::to_string(i) + " is empty");
    }
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i != j && generators_[j].is_subset_of(g)) {
        throw InvalidInstance("generator " + std::to_string(i) +
                              " contains generator " + std::to_string(j));
      }
    }
    covered = covered | g;
  }
  if (covered.size() != p_) {
    throw InvalidInstance("generators do not cover every outcome");
  }
}

bool MonotonePropertyForm::satisfies(const OutcomeSet& s) const {
  for (const auto& g : generators_) {
    if (g.is_subset_of(s)) return true;
  }
  return false;
}

Pm1Result solve_pm1_monotone(const MonotonePropertyForm& form,
                             const Pm1Partition& part) {
  if (part.universe_size() != form.outcome_count()) {
    throw InvalidInstance("partition does not cover the form's outcomes");
  }
  for (const auto& g : form.generators()) {
    if (g.is_subset_of(part.omega_a())) {
      return {Player::Alice, {Player::Alice, SetStrategy{g}}, 1};
    }
  }
  // omega_b hits every generator; shrink it while it still does.
  OutcomeSet witness = part.omega_b();
  for (OutcomeId w : witness.members()) {
    OutcomeSet trial = witness;
    trial.erase(w);
    if (!form.satisfies(trial.complement())) witness = std::move(trial);
  }
  return {Player::Bob, {Player::Bob, SetStrategy{witness}}, 1};
}

std::vector<OutcomeSet> minimal_transversals(const MonotonePropertyForm& form,
                                             int max_outcomes) {
  const int p = form.outcome_count();
  if (p > max_outcomes || p > 62) {
    throw SizeLimitExceeded("monotone expansion limited to " +
                            std::to_string(max_outcomes) + " outcomes");
  }
  std::vector<std::uint64_t> gens;
  for (const auto& g : form.generators()) gens.push_back(g.mask());
  auto hits_all = [&gens](std::uint64_t t) {
    for (auto g : gens) {
      if ((g & t) == 0) return false;
    }
    return true;
  };
  std::vector<OutcomeSet> out;
  const std::uint64_t total = std::uint64_t{1} << p;
  for (std::uint64_t t = 1; t < total; ++t) {
    if (!hits_all(t)) continue;
    bool minimal = true;
    for (std::uint64_t rest = t; rest != 0 && minimal; rest &= rest - 1) {
      if (hits_all(t & ~(rest & -rest))) minimal = false;
    }
    if (minimal) out.push_back(OutcomeSet::from_mask(p, t));
  }
  return out;
}

ExplicitGameForm expand_explicit_monotone(const MonotonePropertyForm& form,
                                          int max_outcomes) {
  const auto cols = minimal_transversals(form, max_outcomes);
  const auto& rows = form.generators();
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = (rows[i] & cols[j]).first();
    }
  }
  return ExplicitGameForm(std::move(cells), form.outcome_count());
}

}  // namespace lexsafe
