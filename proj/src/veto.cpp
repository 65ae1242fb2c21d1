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

#include "lexsafe/veto.hpp"

#include <algorithm>
#include <string>

#include "lexsafe/errors.hpp"

namespace lexsafe {

void validate_scheme(const VetoScheme& s) {
  auto check = [](std::int64_t v, const std::string& what) {
    if (v < 1 || v > kMaxVetoValue) {
      throw InvalidInstance(what + " = " + std::to_string(v) +
                            " is outside [1, 2^31 - 1]");
    }
  };
  check(s.mu_a, "mu_a");
  check(s.mu_b, "mu_b");
  if (s.lambda.empty()) throw InvalidInstance("veto scheme has no candidates");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.lambda.size(); ++i) {
    check(s.lambda[i], "lambda[" + std::to_string(i) + "]");
    total += s.lambda[i];
  }
  if (s.mu_a + s.mu_b + 1 != total) {
    throw InvalidInstance("budget identity violated: mu_a + mu_b + 1 = " +
                          std::to_string(s.mu_a) + " + " +
                          std::to_string(s.mu_b) + " + 1 = " +
                          std::to_string(s.mu_a + s.mu_b + 1) +
                          " but the resistances sum to " + std::to_string(total));
  }
}

namespace {

__extension__ using Wide = unsigned __int128;

std::int64_t resistance_of(const VetoScheme& s, const OutcomeSet& set) {
  std::int64_t sum = 0;
  for (OutcomeId w : set.members()) sum += s.lambda[w];
  return sum;
}

CardDistribution veto_all(const VetoScheme& s, Player owner,
                          const OutcomeSet& target, std::int64_t sum) {
  CardDistribution d{owner, std::vector<std::int64_t>(s.lambda.size(), 0)};
  for (OutcomeId w : target.members()) d.cards[w] = s.lambda[w];
  const OutcomeId spare = target.empty() ? 0 : target.first();
  d.cards[spare] += s.budget(owner) - sum;
  return d;
}

}  // namespace

Pm1Result solve_pm1_veto(const VetoScheme& s, const Pm1Partition& part) {
  if (part.universe_size() != s.outcome_count()) {
    throw InvalidInstance("partition does not cover the candidates");
  }
  const OutcomeSet omega_b = part.omega_b();
  const std::int64_t against_a = resistance_of(s, omega_b);
  if (against_a <= s.mu_a) {
    return {Player::Alice,
            {Player::Alice, veto_all(s, Player::Alice, omega_b, against_a)}, 1};
  }
  const std::int64_t against_b = resistance_of(s, part.omega_a());
  if (against_b > s.mu_b) {
    throw InternalError("neither player can veto the opponent's candidates");
  }
  return {Player::Bob,
          {Player::Bob, veto_all(s, Player::Bob, part.omega_a(), against_b)}, 1};
}

OutcomeSet survivors(const VetoScheme& s, const CardDistribution& x,
                     const CardDistribution& y) {
  const int p = s.outcome_count();
  if (static_cast<int>(x.cards.size()) != p ||
      static_cast<int>(y.cards.size()) != p) {
    throw InvalidInstance("card distribution has the wrong length");
  }
  OutcomeSet out(p);
  for (int w = 0; w < p; ++w) {
    if (x.cards[w] + y.cards[w] < s.lambda[w]) out.insert(w);
  }
  return out;
}

OutcomeId elect(const VetoScheme& s, const CardDistribution& x,
                const CardDistribution& y) {
  const OutcomeId w = survivors(s, x, y).first();
  if (w < 0) throw InternalError("every candidate was vetoed");
  return w;
}

namespace {

// C(n, k), saturating at max() + 1 of std::size_t.
std::size_t bounded_binomial(std::int64_t n, std::int64_t k, std::size_t cap) {
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * static_cast<Wide>(n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

std::vector<CardDistribution> enumerate_distributions(const VetoScheme& s,
                                                      Player player,
                                                      std::size_t limit) {
  const int p = s.outcome_count();
  const std::int64_t budget = s.budget(player);
  const std::size_t total = bounded_binomial(budget + p - 1, p - 1, limit);
  if (total > limit) {
    throw SizeLimitExceeded(std::string(player_name(player)) +
                            " has more than " + std::to_string(limit) +
                            " card distributions");
  }
  std::vector<CardDistribution> out;
  out.reserve(total);
  std::vector<std::int64_t> c(p, 0);
  c[0] = budget;
  while (true) {
    out.push_back({player, c});
    int i = p - 2;
    while (i >= 0 && c[i] == 0) --i;
    if (i < 0) break;
    std::int64_t tail = 0;
    for (int k = i + 1; k < p; ++k) {
      tail += c[k];
      c[k] = 0;
    }
    --c[i];
    c[i + 1] = tail + 1;
  }
  return out;
}

ExplicitGameForm expand_explicit_veto(const VetoScheme& s, std::size_t limit) {
  validate_scheme(s);
  const auto rows = enumerate_distributions(s, Player::Alice, limit);
  const auto cols = enumerate_distributions(s, Player::Bob, limit);
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = elect(s, rows[i], cols[j]);
    }
  }
  return ExplicitGameForm(std::move(cells), s.outcome_count());
}

}  // namespace lexsafe
