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
#include "lexsafe/jordan.hpp"
#include "support/brute_force.hpp"

using namespace lexsafe;

namespace {

// Areas 1..4 are the quadrants NW, NE, SW, SE; area 5 is the centre.
JordanMap quadrants_with_centre() {
  return JordanMap(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}},
                   {{{0, 1}, {1, 3}, {2, 3}, {0, 2}}});
}

// Same quadrants meeting in a single point: degree 4 in the middle.
JordanMap quadrants_only() {
  return JordanMap(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {{{0, 1}, {1, 3}, {2, 3}, {0, 2}}});
}

OutcomeSet areas(int p, std::vector<int> one_based) { return brute::set(p, std::move(one_based)); }

const OutcomeSet& connector(const Pm1Result& r) {
  return std::get<SetStrategy>(r.strategy.payload).outcomes;
}

}  // namespace

TEST_CASE("map validation") {
  CHECK_THROWS_AS(JordanMap(0, {}, {{{}, {}, {}, {}}}), InvalidInstance);
  CHECK_THROWS_AS(JordanMap(2, {{0, 0}}, {{{0}, {0}, {1}, {1}}}), InvalidInstance);
  CHECK_THROWS_AS(JordanMap(2, {{0, 2}}, {{{0}, {0}, {1}, {1}}}), InvalidInstance);
  CHECK_THROWS_AS(JordanMap(2, {{0, 1}}, {{{0}, {}, {1}, {1}}}), InvalidInstance);
  const JordanMap m(2, {{0, 1}, {1, 0}}, {{{0}, {0, 1}, {1}, {0, 1}}});
  CHECK(m.neighbors(0) == std::vector<int>{1});
  CHECK(m.neighbors(1) == std::vector<int>{0});
}

TEST_CASE("solver on the five-area map") {
  const JordanMap m = quadrants_with_centre();
  SUBCASE("centre alone for Bob") {
    const Pm1Result r = solve_pm1_jordan(m, Pm1Partition(areas(5, {1, 2, 3, 4})));
    CHECK(r.winner == Player::Alice);
    CHECK(connector(r) == areas(5, {3, 4}));
    CHECK(connects(m, connector(r), Side::West, Side::East));
  }
  SUBCASE("Bob connects through the west column") {
    const Pm1Result r = solve_pm1_jordan(m, Pm1Partition(areas(5, {2, 4})));
    CHECK(r.winner == Player::Bob);
    CHECK(connector(r) == areas(5, {1, 3}));
    CHECK(connects(m, areas(5, {1, 3, 5}), Side::North, Side::South));
  }
  SUBCASE("partition size mismatch") {
    CHECK_THROWS_AS(solve_pm1_jordan(m, Pm1Partition(OutcomeSet(4))), InvalidInstance);
  }
}

TEST_CASE("connector minimization") {
  const JordanMap m = quadrants_with_centre();
  CHECK(minimize_connector(m, areas(5, {1, 2, 5}), Side::West, Side::East) == areas(5, {1, 2}));
  CHECK(minimize_connector(m, areas(5, {1, 2}), Side::West, Side::East) == areas(5, {1, 2}));
  CHECK(minimize_connector(m, areas(5, {1, 4, 5}), Side::West, Side::East) ==
        areas(5, {1, 4, 5}));
  const OutcomeSet full = minimize_connector(m, OutcomeSet::full(5), Side::North, Side::South);
  CHECK(brute::subset(full, OutcomeSet::full(5)));
  for (int a : full.members()) {
    OutcomeSet less = full;
    less.erase(a);
    CHECK_FALSE(connects(m, less, Side::North, Side::South));
  }
}

TEST_CASE("correspondence of the five-area map") {
  const JordanMap m = quadrants_with_centre();
  const auto rows = enumerate_connectors(m, Player::Alice);
  const auto cols = enumerate_connectors(m, Player::Bob);
  CHECK(rows == std::vector<OutcomeSet>{areas(5, {1, 2}), areas(5, {3, 4}), areas(5, {2, 3, 5}),
                                        areas(5, {1, 4, 5})});
  CHECK(cols == std::vector<OutcomeSet>{areas(5, {1, 3}), areas(5, {2, 4}), areas(5, {2, 3, 5}),
                                        areas(5, {1, 4, 5})});
  const auto g = jordan_correspondence(m);
  const std::vector<std::vector<std::vector<int>>> expected = {
      {{1}, {2}, {2}, {1}},
      {{3}, {4}, {3}, {4}},
      {{3}, {2}, {2, 3, 5}, {5}},
      {{1}, {4}, {5}, {1, 4, 5}},
  };
  int multi = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(g[i][j] == areas(5, expected[i][j]));
      if (g[i][j].size() > 1) ++multi;
    }
  }
  CHECK(multi == 2);

  SUBCASE("every selection is tight") {
    int selections = 0;
    for (int s1 : g[2][2].members()) {
      for (int s2 : g[3][3].members()) {
        std::vector<std::vector<int>> rows1(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) rows1[i][j] = g[i][j].first() + 1;
        }
        rows1[2][2] = s1 + 1;
        rows1[3][3] = s2 + 1;
        const ExplicitGameForm f = brute::form(rows1);
        CHECK(brute::tight(f));
        CHECK(is_tight(f, 20).tight);
        ++selections;
      }
    }
    CHECK(selections == 9);
  }

  SUBCASE("expansion picks the smallest area of each cell") {
    const ExplicitGameForm f = expand_explicit_jordan(m);
    CHECK(f.rows() == 4);
    CHECK(f.cols() == 4);
    CHECK(f(2, 2) == 1);
    CHECK(f(3, 3) == 0);
  }
}

TEST_CASE("degenerate and broken maps") {
  SUBCASE("a single area") {
    const JordanMap m(1, {}, {{{0}, {0}, {0}, {0}}});
    const ExplicitGameForm f = expand_explicit_jordan(m);
    CHECK(f.rows() == 1);
    CHECK(f.cols() == 1);
    CHECK(solve_pm1_jordan(m, Pm1Partition(OutcomeSet::full(1))).winner == Player::Alice);
    CHECK(solve_pm1_jordan(m, Pm1Partition(OutcomeSet(1))).winner == Player::Bob);
  }
  SUBCASE("a vertical strip") {
    const JordanMap m(2, {{0, 1}}, {{{0}, {0, 1}, {1}, {0, 1}}});
    CHECK(enumerate_connectors(m, Player::Alice) ==
          std::vector<OutcomeSet>{areas(2, {1}), areas(2, {2})});
    CHECK(enumerate_connectors(m, Player::Bob) == std::vector<OutcomeSet>{areas(2, {1, 2})});
    const ExplicitGameForm f = expand_explicit_jordan(m);
    CHECK(f.rows() == 2);
    CHECK(f.cols() == 1);
    CHECK(f(0, 0) == 0);
    CHECK(f(1, 0) == 1);
  }
  SUBCASE("four quadrants meeting in a point") {
    const JordanMap m = quadrants_only();
    CHECK_THROWS_AS(solve_pm1_jordan(m, Pm1Partition(areas(4, {1, 4}))), InvalidMap);
    CHECK_THROWS_AS(solve_pm1_jordan(m, Pm1Partition(areas(4, {2, 3}))), InvalidMap);
    CHECK(solve_pm1_jordan(m, Pm1Partition(areas(4, {1, 2}))).winner == Player::Alice);
  }
  SUBCASE("size limit") {
    const JordanMap m(13, {}, {{{0}, {0}, {0}, {0}}});
    CHECK_THROWS_AS(enumerate_connectors(m, Player::Alice), SizeLimitExceeded);
    CHECK_THROWS_AS(expand_explicit_jordan(m), SizeLimitExceeded);
  }
}

TEST_CASE("random subdivisions") {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 150; ++k) {
    const int p = brute::uniform(rng, 1, 8);
    const JordanMap m = brute::random_jordan(rng, p);
    const auto rows = enumerate_connectors(m, Player::Alice);
    const auto cols = enumerate_connectors(m, Player::Bob);
    for (const auto& x : rows) {
      for (const auto& y : cols) CHECK(x.intersects(y));
    }
    const ExplicitGameForm f = expand_explicit_jordan(m);
    CHECK(brute::tight(f));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
      const Pm1Partition part(OutcomeSet::from_mask(p, mask));
      Pm1Result r;
      REQUIRE_NOTHROW(r = solve_pm1_jordan(m, part));
      CHECK((r.winner == Player::Alice) == brute::alice_wins(f, part.omega_a()));
      const OutcomeSet& c = connector(r);
      CHECK(brute::subset(c, part.winning_set(r.winner)));
      const auto [from, to] = connector_sides(r.winner);
      CHECK(connects(m, c, from, to));
      const auto& minimal = r.winner == Player::Alice ? rows : cols;
      CHECK(std::find(minimal.begin(), minimal.end(), c) != minimal.end());
    }
  }
}
