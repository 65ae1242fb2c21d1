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

#ifndef LEXSAFE_EXPLICIT_FORM_HPP_
#define LEXSAFE_EXPLICIT_FORM_HPP_

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

using OutcomeMatrix =
    Eigen::Matrix<OutcomeId, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A game form g : X x Y -> [0, p) stored as a dense matrix, rows for Alice
/// and columns for Bob.
///
/// Construction only checks that every cell lies in [0, p). Surjectivity is
/// a property of input files (see is_surjective); forms derived by
/// reduce_minimal may legitimately miss outcomes.
class ExplicitGameForm {
 public:
  ExplicitGameForm() = default;
  ExplicitGameForm(OutcomeMatrix cells, int outcome_count);

  static ExplicitGameForm from_rows(
      const std::vector<std::vector<OutcomeId>>& rows, int outcome_count);

  int rows() const { return static_cast<int>(cells_.rows()); }
  int cols() const { return static_cast<int>(cells_.cols()); }
  int outcome_count() const { return p_; }
  OutcomeId operator()(int x, int y) const { return cells_(x, y); }
  const OutcomeMatrix& cells() const { return cells_; }

  OutcomeSet row_support(int x) const;
  OutcomeSet col_support(int y) const;
  OutcomeSet support(Player owner, int index) const {
    return owner == Player::Alice ? row_support(index) : col_support(index);
  }
  bool is_surjective() const;
  ExplicitGameForm transposed() const;

  friend bool operator==(const ExplicitGameForm& a, const ExplicitGameForm& b) {
    return a.p_ == b.p_ && a.cells_.rows() == b.cells_.rows() &&
           a.cells_.cols() == b.cells_.cols() && a.cells_ == b.cells_;
  }

 private:
  OutcomeMatrix cells_;
  int p_ = 0;
};

/// Scans rows for a support inside omega_a, then columns for a support
/// inside omega_b; the first hit in index order is the witness. Throws
/// NotTight when neither exists.
Pm1Result solve_pm1_explicit(const ExplicitGameForm& form,
                             const Pm1Partition& part);

struct TightnessReport {
  bool tight = true;
  /// Alice's side of the lowest-mask partition nobody wins, if any.
  std::optional<OutcomeSet> failing_omega_a;
};

constexpr int kDefaultTightnessLimit = 20;

/// Decides tightness by solving every one of the 2^p +-1 games.
TightnessReport is_tight(const ExplicitGameForm& form,
                         int max_outcomes = kDefaultTightnessLimit);

/// Values of the +-1 matrix game (payoff +1 on omega_a, -1 elsewhere).
struct Pm1Values {
  int maxmin = 0;
  int minmax = 0;
};
Pm1Values pm1_values(const ExplicitGameForm& form, const Pm1Partition& part);

struct Situation {
  int x = 0;
  int y = 0;
  friend bool operator==(const Situation&, const Situation&) = default;
};

bool is_nash(const ExplicitGameForm& form, const Preference& pref_a,
             const Preference& pref_b, Situation s);

/// All pure Nash equilibria, in row-major order.
std::vector<Situation> enumerate_ne(const ExplicitGameForm& form,
                                    const Preference& pref_a,
                                    const Preference& pref_b);

struct Hypergraphs {
  std::vector<OutcomeSet> a_edges;
  std::vector<OutcomeSet> b_edges;
};

Hypergraphs extract_hypergraphs(const ExplicitGameForm& form);

/// Drops every strategy whose support strictly contains another support of
/// the same player, and keeps only the first of equal-support strategies.
/// Both axes are reduced against the supports of the input form.
ExplicitGameForm reduce_minimal(const ExplicitGameForm& form);

/// NE box of `player`'s lexsafe equilibria: all lexsafe strategies of the
/// player crossed with the opponent strategies that complete an equilibrium
/// with them. Empty when the form is not tight.
struct NeBox {
  std::vector<int> rows;
  std::vector<int> cols;
  OutcomeId outcome = -1;
};
NeBox enumerate_box(const ExplicitGameForm& form, const Preference& pref_a,
                    const Preference& pref_b, Player player);

}  // namespace lexsafe

#endif  // LEXSAFE_EXPLICIT_FORM_HPP_
