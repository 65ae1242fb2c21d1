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

#ifndef LEXSAFE_BARGAINING_HPP_
#define LEXSAFE_BARGAINING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

/// Monotone bargaining between m ordered items of Alice and n of Bob.
/// Outcome (i, j) (0-based) has index i * n + j.
class MbScheme {
 public:
  MbScheme() = default;
  MbScheme(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int outcome_count() const { return m_ * n_; }
  OutcomeId deal_id(int a, int b) const { return a * n_ + b; }
  int alice_item(OutcomeId w) const { return w / n_; }
  int bob_item(OutcomeId w) const { return w % n_; }
  /// "a<i>b<j>" with 1-based item numbers.
  std::vector<std::string> labels() const;

 private:
  int m_ = 1;
  int n_ = 1;
};

struct StrategyCounts {
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  std::uint64_t outcomes = 0;
};

/// |X| = C(m+n-1, m), |Y| = C(m+n-1, n), |Omega| = mn. Throws
/// SizeLimitExceeded when a count does not fit in 63 bits.
StrategyCounts count_strategies(const MbScheme& scheme);

/// Which greedy sweep solves the +-1 game. OneSided walks a_1, a_2, ...
/// with a single pointer into B; Alternating builds the play a^1, b^1,
/// a^2, ... Both always pick the same winner.
enum class MbSweep { OneSided, Alternating };

Pm1Result solve_pm1_mb(const MbScheme& scheme, const Pm1Partition& part,
                       MbSweep sweep = MbSweep::OneSided);

bool is_monotone(const MbScheme& scheme, const MonotoneMap& map);

/// The deal reached by walking Gamma(x, y) from a_1 until a vertex repeats.
OutcomeId deal(const MbScheme& scheme, const MonotoneMap& x,
               const MonotoneMap& y);

constexpr std::size_t kDefaultMbLimit = 3003;

/// Non-decreasing maps of `player` in lexicographic image order.
std::vector<MonotoneMap> enumerate_monotone_maps(
    const MbScheme& scheme, Player player, std::size_t limit = kDefaultMbLimit);

ExplicitGameForm expand_explicit_mb(const MbScheme& scheme,
                                    std::size_t limit = kDefaultMbLimit);

}  // namespace lexsafe

#endif  // LEXSAFE_BARGAINING_HPP_
