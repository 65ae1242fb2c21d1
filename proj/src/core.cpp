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

#include "lexsafe/core.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }

}  // namespace

const char* player_name(Player p) {
  return p == Player::Alice ? "alice" : "bob";
}

OutcomeSet::OutcomeSet(int universe_size)
    : universe_(universe_size), words_(word_count(universe_size), 0) {
  if (universe_size < 0) throw InvalidInstance("negative universe size");
}

OutcomeSet::OutcomeSet(int universe_size,
                       std::initializer_list<OutcomeId> members)
    : OutcomeSet(universe_size) {
  for (OutcomeId w : members) insert(w);
}

OutcomeSet::OutcomeSet(int universe_size, std::span<const OutcomeId> members)
    : OutcomeSet(universe_size) {
  for (OutcomeId w : members) insert(w);
}

OutcomeSet OutcomeSet::full(int universe_size) {
  return OutcomeSet(universe_size).complement();
}

OutcomeSet OutcomeSet::from_mask(int universe_size, std::uint64_t mask) {
  if (universe_size > kWordBits) {
    throw InvalidInstance("from_mask needs a universe of at most 64 outcomes");
  }
  OutcomeSet s(universe_size);
  if (universe_size == 0) return s;
  const std::uint64_t keep = universe_size == kWordBits
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << universe_size) - 1;
  s.words_[0] = mask & keep;
  return s;
}

void OutcomeSet::check_index(OutcomeId w) const {
  if (w < 0 || w >= universe_) {
    throw InvalidInstance("outcome index " + std::to_string(w) +
                          " outside universe of size " +
                          std::to_string(universe_));
  }
}

void OutcomeSet::check_same_universe(const OutcomeSet& other) const {
  if (universe_ != other.universe_) {
    throw InvalidInstance("outcome sets over different universes (" +
                          std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

bool OutcomeSet::contains(OutcomeId w) const {
  if (w < 0 || w >= universe_) return false;
  return (words_[w / kWordBits] >> (w % kWordBits)) & 1U;
}

void OutcomeSet::insert(OutcomeId w) {
  check_index(w);
  words_[w / kWordBits] |= std::uint64_t{1} << (w % kWordBits);
}

void OutcomeSet::erase(OutcomeId w) {
  check_index(w);
  words_[w / kWordBits] &= ~(std::uint64_t{1} << (w % kWordBits));
}

int OutcomeSet::size() const {
  int n = 0;
  for (auto word : words_) n += std::popcount(word);
  return n;
}

bool OutcomeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool OutcomeSet::is_subset_of(const OutcomeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool OutcomeSet::intersects(const OutcomeSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

OutcomeSet OutcomeSet::complement() const {
  OutcomeSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  const int tail = universe_ % kWordBits;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return out;
}

OutcomeSet OutcomeSet::operator&(const OutcomeSet& other) const {
  check_same_universe(other);
  OutcomeSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
  return out;
}

OutcomeSet OutcomeSet::operator|(const OutcomeSet& other) const {
  check_same_universe(other);
  OutcomeSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

OutcomeSet OutcomeSet::operator-(const OutcomeSet& other) const {
  check_same_universe(other);
  OutcomeSet out(*this);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

std::vector<OutcomeId> OutcomeSet::members() const {
  std::vector<OutcomeId> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t word = words_[i];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<OutcomeId>(i * kWordBits + bit));
      word &= word - 1;
    }
  }
  return out;
}

OutcomeId OutcomeSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<OutcomeId>(i * kWordBits + std::countr_zero(words_[i]));
    }
  }
  return -1;
}

std::uint64_t OutcomeSet::mask() const {
  if (universe_ > kWordBits) {
    throw InvalidInstance("mask() needs a universe of at most 64 outcomes");
  }
  return words_.empty() ? 0 : words_[0];
}

Preference::Preference(std::vector<OutcomeId> worst_to_best)
    : order_(std::move(worst_to_best)), rank_(order_.size(), -1) {
  const int p = static_cast<int>(order_.size());
  for (int r = 0; r < p; ++r) {
    const OutcomeId w = order_[r];
    if (w < 0 || w >= p) {
      throw InvalidPreference("outcome index out of range in preference",
                              std::to_string(w));
    }
    if (rank_[w] != -1) {
      throw InvalidPreference("outcome repeated in preference",
                              std::to_string(w));
    }
    rank_[w] = r;
  }
}

Preference Preference::identity(int p) {
  std::vector<OutcomeId> order(p);
  for (int i = 0; i < p; ++i) order[i] = i;
  return Preference(std::move(order));
}

Preference validate_preference(std::span<const OutcomeId> raw, int p) {
  std::vector<bool> seen(p, false);
  for (OutcomeId w : raw) {
    if (w < 0 || w >= p) {
      throw InvalidPreference("unknown outcome in preference", std::to_string(w));
    }
    if (seen[w]) {
      throw InvalidPreference("outcome repeated in preference",
                              std::to_string(w));
    }
    seen[w] = true;
  }
  for (int w = 0; w < p; ++w) {
    if (!seen[w]) {
      throw InvalidPreference("outcome missing from preference",
                              std::to_string(w));
    }
  }
  return Preference(std::vector<OutcomeId>(raw.begin(), raw.end()));
}

Preference validate_preference(std::span<const std::string> raw,
                               std::span<const std::string> labels) {
  std::unordered_map<std::string, OutcomeId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<OutcomeId>(i));
  }
  const int p = static_cast<int>(labels.size());
  std::vector<bool> seen(p, false);
  std::vector<OutcomeId> order;
  order.reserve(raw.size());
  for (const auto& label : raw) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw InvalidPreference("unknown outcome '" + label + "' in preference",
                              label);
    }
    if (seen[it->second]) {
      throw InvalidPreference("outcome '" + label + "' repeated in preference",
                              label);
    }
    seen[it->second] = true;
    order.push_back(it->second);
  }
  for (int w = 0; w < p; ++w) {
    if (!seen[w]) {
      throw InvalidPreference(
          "outcome '" + labels[w] + "' missing from preference", labels[w]);
    }
  }
  return Preference(std::move(order));
}

std::strong_ordering lex_compare(const OutcomeSet& s, const OutcomeSet& t,
                                 const Preference& pref) {
  if (s.universe_size() != t.universe_size() ||
      s.universe_size() != pref.size()) {
    throw InvalidInstance("lex_compare: universe size mismatch");
  }
  // Walk from the worst outcome up; the first disagreement decides.
  for (int r = 0; r < pref.size(); ++r) {
    const OutcomeId w = pref.at_rank(r);
    const bool in_s = s.contains(w);
    const bool in_t = t.contains(w);
    if (in_s != in_t) {
      return in_s ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

OutcomeId pref_max(const OutcomeSet& s, const Preference& pref) {
  OutcomeId best = -1;
  for (OutcomeId w : s.members()) {
    if (best == -1 || pref.prefers(w, best)) best = w;
  }
  if (best == -1) throw InvalidInstance("pref_max of an empty set");
  return best;
}

std::string format_set(const OutcomeSet& s,
                       std::span<const std::string> labels) {
  std::string out = "{";
  bool first = true;
  for (OutcomeId w : s.members()) {
    if (!first) out += ",";
    first = false;
    out += w < static_cast<OutcomeId>(labels.size()) ? labels[w]
                                                     : std::to_string(w);
  }
  return out + "}";
}

}  // namespace lexsafe
