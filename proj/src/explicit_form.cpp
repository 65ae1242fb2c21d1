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

#include "lexsafe/explicit_form.hpp"

#include <string>

#include "lexsafe/errors.hpp"

namespace lexsafe {

ExplicitGameForm::ExplicitGameForm(OutcomeMatrix cells, int outcome_count)
    : cells_(std::move(cells)), p_(outcome_count) {
  if (cells_.rows() < 1 || cells_.cols() < 1) {
    throw InvalidInstance("game form needs at least one row and one column");
  }
  if (p_ < 1) throw InvalidInstance("game form needs at least one outcome");
  if (cells_.minCoeff() < 0 || cells_.maxCoeff() >= p_) {
    throw InvalidInstance("game form cell outside [0, " + std::to_string(p_) +
                          ")");
  }
}

ExplicitGameForm ExplicitGameForm::from_rows(
    const std::vector<std::vector<OutcomeId>>& rows, int outcome_count) {
  if (rows.empty() || rows.front().empty()) {
    throw InvalidInstance("game form needs at least one row and one column");
  }
  OutcomeMatrix cells(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) {
      throw InvalidInstance("ragged game form: row " + std::to_string(i) +
                            " has " + std::to_string(rows[i].size()) +
                            " cells");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) cells(i, j) = rows[i][j];
  }
  return ExplicitGameForm(std::move(cells), outcome_count);
}

OutcomeSet ExplicitGameForm::row_support(int x) const {
  OutcomeSet s(p_);
  for (int y = 0; y < cols(); ++y) s.insert(cells_(x, y));
  return s;
}

OutcomeSet ExplicitGameForm::col_support(int y) const {
  OutcomeSet s(p_);
  for (int x = 0; x < rows(); ++x) s.insert(cells_(x, y));
  return s;
}

bool ExplicitGameForm::is_surjective() const {
  OutcomeSet seen(p_);
  for (int x = 0; x < rows(); ++x) seen = seen | row_support(x);
  return seen.size() == p_;
}

ExplicitGameForm ExplicitGameForm::transposed() const {
  return ExplicitGameForm(cells_.transpose(), p_);
}

Pm1Result solve_pm1_explicit(const ExplicitGameForm& form,
                             const Pm1Partition& part) {
  if (part.universe_size() != form.outcome_count()) {
    throw InvalidInstance("partition does not cover the game form's outcomes");
  }
  for (int x = 0; x < form.rows(); ++x) {
    if (form.row_support(x).is_subset_of(part.omega_a())) {
      return {Player::Alice, {Player::Alice, ExplicitStrategy{x}}, 1};
    }
  }
  const OutcomeSet omega_b = part.omega_b();
  for (int y = 0; y < form.cols(); ++y) {
    if (form.col_support(y).is_subset_of(omega_b)) {
      return {Player::Bob, {Player::Bob, ExplicitStrategy{y}}, 1};
    }
  }
  throw NotTight("no row inside omega_a and no column inside omega_b");
}

TightnessReport is_tight(const ExplicitGameForm& form, int max_outcomes) {
  const int p = form.outcome_count();
  if (p > max_outcomes || p > 62) {
    throw SizeLimitExceeded("tightness check limited to " +
                            std::to_string(max_outcomes) + " outcomes, form has " +
                            std::to_string(p));
  }
  std::vector<std::uint64_t> row_masks, col_masks;
  for (int x = 0; x < form.rows(); ++x) row_masks.push_back(form.row_support(x).mask());
  for (int y = 0; y < form.cols(); ++y) col_masks.push_back(form.col_support(y).mask());

  const std::uint64_t total = std::uint64_t{1} << p;
  for (std::uint64_t alice = 0; alice < total; ++alice) {
    bool solved = false;
    for (auto r : row_masks) {
      if ((r & ~alice) == 0) {
        solved = true;
        break;
      }
    }
    if (!solved) {
      for (auto c : col_masks) {
        if ((c & alice) == 0) {
          solved = true;
          break;
        }
      }
    }
    if (!solved) return {false, OutcomeSet::from_mask(p, alice)};
  }
  return {true, std::nullopt};
}

Pm1Values pm1_values(const ExplicitGameForm& form, const Pm1Partition& part) {
  const Eigen::MatrixXi payoff = form.cells().unaryExpr(
      [&part](OutcomeId w) { return part.alice_wins_on(w) ? 1 : -1; }).cast<int>();
  return {payoff.rowwise().minCoeff().maxCoeff(),
          payoff.colwise().maxCoeff().minCoeff()};
}

bool is_nash(const ExplicitGameForm& form, const Preference& pref_a,
             const Preference& pref_b, Situation s) {
  const OutcomeId here = form(s.x, s.y);
  for (int x = 0; x < form.rows(); ++x) {
    if (pref_a.prefers(form(x, s.y), here)) return false;
  }
  for (int y = 0; y < form.cols(); ++y) {
    if (pref_b.prefers(form(s.x, y), here)) return false;
  }
  return true;
}

std::vector<Situation> enumerate_ne(const ExplicitGameForm& form,
                                    const Preference& pref_a,
                                    const Preference& pref_b) {
  std::vector<Situation> out;
  for (int x = 0; x < form.rows(); ++x) {
    for (int y = 0; y < form.cols(); ++y) {
      if (is_nash(form, pref_a, pref_b, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

Hypergraphs extract_hypergraphs(const ExplicitGameForm& form) {
  Hypergraphs h;
  for (int x = 0; x < form.rows(); ++x) h.a_edges.push_back(form.row_support(x));
  for (int y = 0; y < form.cols(); ++y) h.b_edges.push_back(form.col_support(y));
  return h;
}

namespace {

// Indices of strategies kept: minimal supports, first of each duplicate.
std::vector<int> minimal_indices(const std::vector<OutcomeSet>& supports) {
  std::vector<int> keep;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < supports.size() && !drop; ++j) {
      if (i == j) continue;
      if (supports[j] == supports[i]) {
        drop = j < i;
      } else if (supports[j].is_subset_of(supports[i])) {
        drop = true;
      }
    }
    if (!drop) keep.push_back(static_cast<int>(i));
  }
  return keep;
}

}  // namespace

ExplicitGameForm reduce_minimal(const ExplicitGameForm& form) {
  const Hypergraphs h = extract_hypergraphs(form);
  const std::vector<int> rows = minimal_indices(h.a_edges);
  const std::vector<int> cols = minimal_indices(h.b_edges);
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = form(rows[i], cols[j]);
    }
  }
  return ExplicitGameForm(std::move(cells), form.outcome_count());
}

NeBox enumerate_box(const ExplicitGameForm& form, const Preference& pref_a,
                    const Preference& pref_b, Player player) {
  if (player == Player::Bob) {
    NeBox box = enumerate_box(form.transposed(), pref_b, pref_a, Player::Alice);
    std::swap(box.rows, box.cols);
    return box;
  }
  // Alice's lexsafe rows share the lexmax support.
  NeBox box;
  std::optional<OutcomeSet> best;
  for (int x = 0; x < form.rows(); ++x) {
    const OutcomeSet s = form.row_support(x);
    if (!best || lex_compare(s, *best, pref_a) == std::strong_ordering::greater) {
      best = s;
      box.rows.assign(1, x);
    } else if (s == *best) {
      box.rows.push_back(x);
    }
  }
  box.outcome = pref_max(*best, pref_b);
  for (int y = 0; y < form.cols(); ++y) {
    bool ok = true;
    for (int x : box.rows) {
      if (form(x, y) != box.outcome) ok = false;
    }
    for (OutcomeId w : form.col_support(y).members()) {
      if (pref_a.prefers(w, box.outcome)) ok = false;
    }
    if (ok) box.cols.push_back(y);
  }
  if (box.cols.empty()) box.rows.clear();
  return box;
}

}  // namespace lexsafe
