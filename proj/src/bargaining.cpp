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

#include "lexsafe/bargaining.hpp"

#include <algorithm>
#include <limits>

#include "lexsafe/errors.hpp"

namespace lexsafe {

MbScheme::MbScheme(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 1) {
    throw InvalidInstance("bargaining scheme needs m, n >= 1");
  }
  if (static_cast<long long>(m) * n > std::numeric_limits<int>::max() / 2) {
    throw SizeLimitExceeded("bargaining scheme has too many deals");
  }
}

std::vector<std::string> MbScheme::labels() const {
  std::vector<std::string> out;
  out.reserve(outcome_count());
  for (int a = 0; a < m_; ++a) {
    for (int b = 0; b < n_; ++b) {
      out.push_back("a" + std::to_string(a + 1) + "b" + std::to_string(b + 1));
    }
  }
  return out;
}

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  constexpr Wide kMax = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    r = r * (n - k + i) / i;
    if (r > kMax) {
      throw SizeLimitExceeded("strategy count C(" + std::to_string(n) + ", " +
                              std::to_string(k) + ") exceeds 2^63");
    }
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

StrategyCounts count_strategies(const MbScheme& scheme) {
  const auto m = static_cast<std::uint64_t>(scheme.m());
  const auto n = static_cast<std::uint64_t>(scheme.n());
  return {binomial(m + n - 1, m), binomial(m + n - 1, n), m * n};
}

namespace {

Pm1Result alice_wins(std::vector<int> image) {
  return {Player::Alice, {Player::Alice, MonotoneMap{Player::Alice, std::move(image)}}, 1};
}

Pm1Result bob_wins(std::vector<int> image) {
  return {Player::Bob, {Player::Bob, MonotoneMap{Player::Bob, std::move(image)}}, 1};
}

Pm1Result sweep_one_sided(const MbScheme& s, const Pm1Partition& part) {
  auto in_a = [&](int a, int b) { return part.alice_wins_on(s.deal_id(a, b)); };
  std::vector<int> x(s.m(), 0);
  // First item reaching each new value of x; they define Bob's answer.
  std::vector<int> first_item;
  std::vector<int> value;
  int ptr = 0;
  for (int a = 0; a < s.m(); ++a) {
    int b = ptr;
    while (b < s.n() && !in_a(a, b)) ++b;
    if (b == s.n()) {
      std::vector<int> y(s.n(), a);
      std::size_t t = 0;
      for (int bb = 0; bb < s.n(); ++bb) {
        while (t < value.size() && value[t] <= bb) ++t;
        y[bb] = t < value.size() ? first_item[t] : a;
      }
      return bob_wins(std::move(y));
    }
    if (value.empty() || value.back() != b) {
      value.push_back(b);
      first_item.push_back(a);
    }
    x[a] = b;
    ptr = b;
  }
  return alice_wins(std::move(x));
}

Pm1Result sweep_alternating(const MbScheme& s, const Pm1Partition& part) {
  auto in_a = [&](int a, int b) { return part.alice_wins_on(s.deal_id(a, b)); };
  std::vector<int> as{0};
  std::vector<int> bs;
  int a = 0;
  int b_prev = -1;
  while (true) {
    int b = b_prev + 1;
    while (b < s.n() && !in_a(a, b)) ++b;
    if (b == s.n()) {
      // y(b) = a^i on [b^{i-1}, b^i), and a^k from b^{k-1} on.
      std::vector<int> y(s.n());
      std::size_t i = 0;
      for (int bb = 0; bb < s.n(); ++bb) {
        while (i < bs.size() && bs[i] <= bb) ++i;
        y[bb] = as[i];
      }
      return bob_wins(std::move(y));
    }
    bs.push_back(b);
    b_prev = b;

    int next = a + 1;
    while (next < s.m() && in_a(next, b)) ++next;
    if (next == s.m()) {
      // x(a) = b^t on [a^t, a^{t+1}).
      std::vector<int> x(s.m());
      std::size_t t = 0;
      for (int aa = 0; aa < s.m(); ++aa) {
        while (t + 1 < as.size() && as[t + 1] <= aa) ++t;
        x[aa] = bs[t];
      }
      return alice_wins(std::move(x));
    }
    as.push_back(next);
    a = next;
  }
}

}  // namespace

Pm1Result solve_pm1_mb(const MbScheme& scheme, const Pm1Partition& part,
                       MbSweep sweep) {
  if (part.universe_size() != scheme.outcome_count()) {
    throw InvalidInstance("partition does not cover the scheme's deals");
  }
  return sweep == MbSweep::OneSided ? sweep_one_sided(scheme, part)
                                    : sweep_alternating(scheme, part);
}

bool is_monotone(const MbScheme& scheme, const MonotoneMap& map) {
  const int len = map.owner == Player::Alice ? scheme.m() : scheme.n();
  const int range = map.owner == Player::Alice ? scheme.n() : scheme.m();
  if (static_cast<int>(map.image.size()) != len) return false;
  for (int i = 0; i < len; ++i) {
    if (map.image[i] < 0 || map.image[i] >= range) return false;
    if (i > 0 && map.image[i] < map.image[i - 1]) return false;
  }
  return true;
}

OutcomeId deal(const MbScheme& scheme, const MonotoneMap& x,
               const MonotoneMap& y) {
  if (x.owner != Player::Alice || y.owner != Player::Bob ||
      !is_monotone(scheme, x) || !is_monotone(scheme, y)) {
    throw InvalidInstance("deal needs monotone maps of Alice and Bob");
  }
  // Vertices: a_i -> i, b_j -> m + j.
  const int m = scheme.m();
  std::vector<int> seen_at(m + scheme.n(), -1);
  std::vector<int> path;
  int v = 0;
  while (seen_at[v] == -1) {
    seen_at[v] = static_cast<int>(path.size());
    path.push_back(v);
    v = v < m ? m + x.image[v] : y.image[v - m];
  }
  const std::size_t cycle_len = path.size() - seen_at[v];
  if (cycle_len != 2) {
    throw InternalError("deal walk closed a cycle of length " +
                        std::to_string(cycle_len));
  }
  const int other = path[seen_at[v] + 1];
  const int a = v < m ? v : other;
  const int b = (v < m ? other : v) - m;
  return scheme.deal_id(a, b);
}

std::vector<MonotoneMap> enumerate_monotone_maps(const MbScheme& scheme,
                                                 Player player,
                                                 std::size_t limit) {
  const StrategyCounts counts = count_strategies(scheme);
  const std::uint64_t total = player == Player::Alice ? counts.alice : counts.bob;
  if (total > limit) {
    throw SizeLimitExceeded(std::string(player_name(player)) + " has " +
                            std::to_string(total) + " monotone maps, limit " +
                            std::to_string(limit));
  }
  const int len = player == Player::Alice ? scheme.m() : scheme.n();
  const int range = player == Player::Alice ? scheme.n() : scheme.m();
  std::vector<MonotoneMap> out;
  out.reserve(total);
  std::vector<int> image(len, 0);
  while (true) {
    out.push_back({player, image});
    int i = len - 1;
    while (i >= 0 && image[i] == range - 1) --i;
    if (i < 0) break;
    ++image[i];
    for (int k = i + 1; k < len; ++k) image[k] = image[i];
  }
  return out;
}

ExplicitGameForm expand_explicit_mb(const MbScheme& scheme, std::size_t limit) {
  const auto rows = enumerate_monotone_maps(scheme, Player::Alice, limit);
  const auto cols = enumerate_monotone_maps(scheme, Player::Bob, limit);
  OutcomeMatrix cells(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      cells(i, j) = deal(scheme, rows[i], cols[j]);
    }
  }
  return ExplicitGameForm(std::move(cells), scheme.outcome_count());
}

}  // namespace lexsafe
