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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "lexsafe/errors.hpp"
#include "lexsafe/lex_engine.hpp"
#include "support/brute_force.hpp"

using namespace lexsafe;
using brute::form;
using brute::g;

namespace {

int index_of(const StrategyHandle& h) { return std::get<ExplicitStrategy>(h.payload).index; }

std::uint64_t lexmax_budget(int p) { return static_cast<std::uint64_t>(p) * (p + 3) / 2; }

}  // namespace

TEST_CASE("lexmax_support examples") {
  SUBCASE("g1 with w3 < w1 < w2") {
    const SupportSearch s = lexmax_support(OracleInstance(form(g(1))), brute::pref({3, 1, 2}));
    CHECK(s.support == brute::set(3, {1}));
    CHECK(index_of(s.witness) == 0);
  }
  SUBCASE("single strategy") {
    const SupportSearch s = lexmax_support(OracleInstance(form({{1, 2, 3}})), brute::pref({2, 3, 1}));
    CHECK(s.support == OutcomeSet::full(3));
    CHECK(index_of(s.witness) == 0);
  }
  SUBCASE("g2 with the natural order") {
    const SupportSearch s = lexmax_support(OracleInstance(form(g(2))), brute::pref({1, 2, 3, 4}));
    CHECK(s.support == brute::set(4, {3, 4}));
    CHECK(index_of(s.witness) == 1);
  }
  SUBCASE("not tight") {
    CHECK_THROWS_AS(lexmax_support(OracleInstance(form(g(7))), brute::pref({1, 2})), NotTight);
  }
}

TEST_CASE("complement_edge examples") {
  SUBCASE("g1") {
    const SupportSearch b = complement_edge(OracleInstance(form(g(1))), brute::set(3, {1}), 0,
                                            brute::pref({3, 1, 2}));
    CHECK(b.support == brute::set(3, {1, 3}));
    CHECK(index_of(b.witness) == 1);
  }
  SUBCASE("g2 with omega* = w4") {
    const SupportSearch b = complement_edge(OracleInstance(form(g(2))), brute::set(4, {3, 4}), 3,
                                            brute::pref({1, 2, 3, 4}));
    CHECK(b.support == brute::set(4, {2, 4}));
    CHECK(index_of(b.witness) == 3);
  }
  SUBCASE("singleton lexmax support at the bottom of the order") {
    // Only row 1 of g6 is minimal; with w1 worst, everything above w1 is removed.
    const SupportSearch b = complement_edge(OracleInstance(form(g(6))), brute::set(2, {1}), 0,
                                            brute::pref({1, 2}));
    CHECK(b.support.contains(0));
    CHECK(b.support == brute::set(2, {1}));
  }
  SUBCASE("omega* outside the support") {
    CHECK_THROWS_AS(complement_edge(OracleInstance(form(g(1))), brute::set(3, {1}), 1,
                                    brute::pref({3, 1, 2})),
                    InvalidInstance);
  }
  SUBCASE("a support that is not lexmax can break the start set") {
    // {w2, w3} is not Alice's lexmax support under w3 < w1 < w2.
    // The start set shrinks to {w3}, which holds no column of g1.
    CHECK_THROWS_AS(complement_edge(OracleInstance(form(g(1))), brute::set(3, {2, 3}), 2,
                                    brute::pref({3, 1, 2})),
                    InternalError);
  }
}

TEST_CASE("worked example on g1") {
  const OracleInstance o(form(g(1)));
  const Preference pa = brute::pref({3, 1, 2});
  // Bob's order is only partly given; w1 at the bottom or in the middle.
  for (const Preference& pb : {brute::pref({1, 3, 2}), brute::pref({3, 1, 2})}) {
    const LexsafeNe a = lexsafe_ne(o, pa, pb, Player::Alice);
    CHECK(index_of(a.x_strategy) == 0);
    CHECK(index_of(a.y_strategy) == 1);
    CHECK(a.ne_outcome == 0);
    CHECK(certify_ne(a, pa, pb));
    const LexsafeNe b = lexsafe_ne(o, pb, pa, Player::Bob);
    CHECK(index_of(b.x_strategy) == 1);
    CHECK(index_of(b.y_strategy) == 0);
    CHECK(b.ne_outcome == 1);
    CHECK(b.support_own == brute::set(3, {1, 2}));
    CHECK(certify_ne(b, pa, pb));
    // Pairing the two lexsafe strategies does not give an equilibrium.
    CHECK_FALSE(brute::nash(form(g(1)), pa, pb, index_of(a.x_strategy), index_of(b.y_strategy)));
  }
}

TEST_CASE("single situation") {
  const OracleInstance o(form({{1}}));
  const LexsafeNe ne = lexsafe_ne(o, brute::pref({1}), brute::pref({1}), Player::Bob);
  CHECK(ne.ne_outcome == 0);
  CHECK(index_of(ne.x_strategy) == 0);
  CHECK(index_of(ne.y_strategy) == 0);
}

TEST_CASE("certify_ne rejects tampered records") {
  const OracleInstance o(form(g(2)));
  const Preference pa = brute::pref({1, 2, 3, 4});
  const Preference pb = brute::pref({1, 2, 3, 4});
  const LexsafeNe ne = lexsafe_ne(o, pa, pb, Player::Alice);
  REQUIRE(certify_ne(ne, pa, pb));
  CHECK(ne.support_own == brute::set(4, {3, 4}));
  CHECK(ne.ne_outcome == 3);
  LexsafeNe other = ne;
  other.ne_outcome = 2;
  CHECK_FALSE(certify_ne(other, pa, pb));
  // Add an outcome Alice prefers to w4 that is outside her support: none exists
  // above w4, so use a preference where w1 is her best.
  const Preference pa2 = brute::pref({2, 3, 4, 1});
  const LexsafeNe ne2 = lexsafe_ne(o, pa2, pb, Player::Alice);
  REQUIRE(certify_ne(ne2, pa2, pb));
  LexsafeNe grown = ne2;
  for (int w = 0; w < 4; ++w) {
    if (!ne2.support_own.contains(w) && pa2.prefers(w, ne2.ne_outcome)) {
      grown.support_other.insert(w);
      break;
    }
  }
  REQUIRE(grown.support_other != ne2.support_other);
  CHECK_FALSE(certify_ne(grown, pa2, pb));
}

TEST_CASE("lexmax support properties on random tight forms") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    const ExplicitGameForm f = brute::random_tight_form(rng, 5, 6);
    const OracleInstance o(f);
    const int p = f.outcome_count();
    const auto rows = brute::row_supports(f);
    for (int t = 0; t < 5; ++t) {
      const Preference pa = brute::random_pref(p, rng);
      const Preference pb = brute::random_pref(p, rng);
      const SupportSearch s = lexmax_support(o, pa);
      CHECK(s.support == brute::lexmax(rows, pa));
      CHECK(f.row_support(index_of(s.witness)) == s.support);
      CHECK(s.queries_used <= lexmax_budget(p));
      for (const auto& r : rows) {
        if (r != s.support) CHECK_FALSE(brute::subset(r, s.support));
      }
      const SupportSearch d = lexmax_support(o, pa, Player::Alice, LexOptions{true});
      CHECK(d.support == s.support);

      for (Player pl : {Player::Alice, Player::Bob}) {
        const Preference& own = pl == Player::Alice ? pa : pb;
        const Preference& other = pl == Player::Alice ? pb : pa;
        const LexsafeNe ne = lexsafe_ne(o, own, other, pl);
        CHECK(certify_ne(ne, pa, pb));
        const int x = index_of(ne.x_strategy);
        const int y = index_of(ne.y_strategy);
        CHECK(brute::nash(f, pa, pb, x, y));
        CHECK(f(x, y) == ne.ne_outcome);
        const OutcomeSet own_support = f.support(pl, pl == Player::Alice ? x : y);
        const OutcomeSet other_support = f.support(opponent(pl), pl == Player::Alice ? y : x);
        CHECK(own_support == ne.support_own);
        CHECK(other_support == ne.support_other);
        CHECK((own_support & other_support) == OutcomeSet(p, {ne.ne_outcome}));
        for (int w : ne.support_other.members()) {
          if (w != ne.ne_outcome) CHECK(own.prefers(ne.ne_outcome, w));
        }
        CHECK(ne.complement_queries <= static_cast<std::uint64_t>(2 * p));
        CHECK(ne.lexmax_queries <= lexmax_budget(p));
        if (pl == Player::Bob) {
          const auto cols = brute::col_supports(f);
          CHECK(ne.support_own == brute::lexmax(cols, pb));
        }
      }
    }
  }
}

TEST_CASE("reducing to minimal strategies keeps the equilibrium outcomes") {
  std::mt19937_64 rng(42);
  for (int k = 1; k <= 6; ++k) {
    const ExplicitGameForm f = form(g(k));
    const ExplicitGameForm r = reduce_minimal(f);
    for (int t = 0; t < 20; ++t) {
      const Preference pa = brute::random_pref(f.outcome_count(), rng);
      const Preference pb = brute::random_pref(f.outcome_count(), rng);
      for (Player pl : {Player::Alice, Player::Bob}) {
        const Preference& own = pl == Player::Alice ? pa : pb;
        const Preference& other = pl == Player::Alice ? pb : pa;
        CHECK(lexsafe_ne(OracleInstance(f), own, other, pl).ne_outcome ==
              lexsafe_ne(OracleInstance(r), own, other, pl).ne_outcome);
      }
    }
  }
}

TEST_CASE("dichotomy uses fewer queries on long chains") {
  // One row per outcome plus a full row; Alice's lexmax support is a singleton.
  const int p = 16;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= p; ++i) rows.push_back(std::vector<int>(p, i));
  const OracleInstance o(form(rows).transposed());
  // Transposed: Alice has one row with every outcome, Bob has singletons.
  const Preference pr = Preference::identity(p);
  const SupportSearch lin = lexmax_support(o, pr, Player::Bob);
  const SupportSearch bin = lexmax_support(o, pr, Player::Bob, LexOptions{true});
  CHECK(lin.support == bin.support);
  CHECK(lin.support == OutcomeSet(p, {p - 1}));
  CHECK(bin.queries_used < lin.queries_used);
}
