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

#ifndef LEXSAFE_CORE_HPP_
#define LEXSAFE_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lexsafe {

/// Dense index of an outcome in [0, p).
using OutcomeId = int;

enum class Player { Alice, Bob };

constexpr Player opponent(Player p) {
  return p == Player::Alice ? Player::Bob : Player::Alice;
}

const char* player_name(Player p);

/// A subset of the outcome universe [0, p).
///
/// Iteration (members()) is always in ascending index order; every
/// deterministic tie-break in the library refers to this order.
class OutcomeSet {
 public:
  OutcomeSet() = default;
  explicit OutcomeSet(int universe_size);
  OutcomeSet(int universe_size, std::initializer_list<OutcomeId> members);
  OutcomeSet(int universe_size, std::span<const OutcomeId> members);

  static OutcomeSet full(int universe_size);
  /// Low `universe_size` bits of `mask`; requires universe_size <= 64.
  static OutcomeSet from_mask(int universe_size, std::uint64_t mask);

  int universe_size() const { return universe_; }
  bool contains(OutcomeId w) const;
  void insert(OutcomeId w);
  void erase(OutcomeId w);
  int size() const;
  bool empty() const;

  bool is_subset_of(const OutcomeSet& other) const;
  bool intersects(const OutcomeSet& other) const;
  OutcomeSet complement() const;
  OutcomeSet operator&(const OutcomeSet& other) const;
  OutcomeSet operator|(const OutcomeSet& other) const;
  OutcomeSet operator-(const OutcomeSet& other) const;

  std::vector<OutcomeId> members() const;
  /// Smallest index in the set; -1 when empty.
  OutcomeId first() const;
  /// Requires universe_size <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const OutcomeSet&, const OutcomeSet&) = default;

 private:
  void check_same_universe(const OutcomeSet& other) const;
  void check_index(OutcomeId w) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A strict total order over [0, p) for one player.
class Preference {
 public:
  Preference() = default;
  /// `worst_to_best[k]` is the outcome at rank k. Throws InvalidPreference
  /// unless the sequence is a permutation of [0, p).
  explicit Preference(std::vector<OutcomeId> worst_to_best);

  static Preference identity(int p);

  int size() const { return static_cast<int>(order_.size()); }
  /// Rank of `w`: 0 is the worst outcome, size()-1 the best.
  int rank(OutcomeId w) const { return rank_[w]; }
  OutcomeId at_rank(int r) const { return order_[r]; }
  const std::vector<OutcomeId>& worst_to_best() const { return order_; }
  bool prefers(OutcomeId a, OutcomeId b) const { return rank_[a] > rank_[b]; }

  friend bool operator==(const Preference&, const Preference&) = default;

 private:
  std::vector<OutcomeId> order_;
  std::vector<int> rank_;
};

/// Validates a worst-to-best sequence of outcome labels against the label
/// table of an instance; reports the offending label on failure.
Preference validate_preference(std::span<const std::string> raw,
                               std::span<const std::string> labels);

/// Same check for raw indices with universe size p.
Preference validate_preference(std::span<const OutcomeId> raw, int p);

/// Lexicographic order over subsets induced by `pref`: the set that
/// omits the worst outcome of the symmetric difference is the greater one.
/// Proper subsets are therefore greater than their supersets and the empty
/// set is the maximum.
std::strong_ordering lex_compare(const OutcomeSet& s, const OutcomeSet& t,
                                 const Preference& pref);

/// The pref-maximal element of a nonempty set.
OutcomeId pref_max(const OutcomeSet& s, const Preference& pref);

/// A +-1 game: Alice wins on omega_a, Bob on its complement.
class Pm1Partition {
 public:
  Pm1Partition() = default;
  explicit Pm1Partition(OutcomeSet omega_a) : omega_a_(std::move(omega_a)) {}
  static Pm1Partition from_bob(const OutcomeSet& omega_b) {
    return Pm1Partition(omega_b.complement());
  }

  int universe_size() const { return omega_a_.universe_size(); }
  const OutcomeSet& omega_a() const { return omega_a_; }
  OutcomeSet omega_b() const { return omega_a_.complement(); }
  OutcomeSet winning_set(Player p) const {
    return p == Player::Alice ? omega_a_ : omega_b();
  }
  bool alice_wins_on(OutcomeId w) const { return omega_a_.contains(w); }

  friend bool operator==(const Pm1Partition&, const Pm1Partition&) = default;

 private:
  OutcomeSet omega_a_;
};

std::string format_set(const OutcomeSet& s,
                       std::span<const std::string> labels);

}  // namespace lexsafe

#endif  // LEXSAFE_CORE_HPP_
