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
#include <string>
#include <vector>

#include "lexsafe/errors.hpp"
#include "lexsafe/positional.hpp"
#include "support/brute_force.hpp"

using namespace lexsafe;
using VO = VertexOwner;

namespace {

// Vertices: A, B, w1, w2, w3.
PositionalStructure gamma1(PositionalMode mode = PositionalMode::Msdggs) {
  return PositionalStructure({VO::Alice, VO::Bob, VO::Terminal, VO::Terminal, VO::Terminal},
                             {{2, 1}, {3, 4}, {}, {}, {}}, 0, mode,
                             {"A", "B", "w1", "w2", "w3"});
}

PositionalStructure gamma2() {
  return PositionalStructure(
      {VO::Alice, VO::Bob, VO::Bob, VO::Terminal, VO::Terminal, VO::Terminal, VO::Terminal},
      {{1, 2}, {3, 4}, {5, 6}, {}, {}, {}, {}}, 0, PositionalMode::Msdggs,
      {"A", "B1", "B2", "w1", "w2", "w3", "w4"});
}

PositionalStructure gamma3() {
  return PositionalStructure({VO::Alice, VO::Bob, VO::Terminal, VO::Terminal},
                             {{1, 2}, {2, 3}, {}, {}}, 0, PositionalMode::Msdggs,
                             {"A", "B", "w1", "w2"});
}

// Alice's A and Bob's B on a 2-cycle, each with a terminal exit.
PositionalStructure one_cycle(PositionalMode mode = PositionalMode::Msdggs) {
  return PositionalStructure({VO::Alice, VO::Bob, VO::Terminal, VO::Terminal},
                             {{1, 2}, {0, 3}, {}, {}}, 0, mode, {"A", "B", "tA", "tB"});
}

OutcomeSet by_label(const PositionalStructure& g, std::vector<std::string> labels) {
  OutcomeSet s(g.outcome_count());
  const auto& all = g.outcomes().labels;
  for (const auto& l : labels) {
    const auto it = std::find(all.begin(), all.end(), l);
    REQUIRE(it != all.end());
    s.insert(static_cast<int>(it - all.begin()));
  }
  return s;
}

int row_of(const std::vector<PositionalStrategy>& list, const PositionalStrategy& s) {
  return static_cast<int>(std::find(list.begin(), list.end(), s) - list.begin());
}

}  // namespace

TEST_CASE("decomposition examples") {
  SUBCASE("gamma1") {
    const PositionalStructure g = gamma1();
    CHECK(g.outcomes().labels == std::vector<std::string>{"w1", "w2", "w3"});
    CHECK_FALSE(g.outcomes().cyclic[g.outcomes().component[0]]);
    CHECK_FALSE(g.outcomes().cyclic[g.outcomes().component[1]]);
    CHECK(g.outcomes().outcome_of_component[g.outcomes().component[0]] == -1);
  }
  SUBCASE("pure 2-cycle") {
    const PositionalStructure g({VO::Alice, VO::Bob}, {{1}, {0}}, 0, PositionalMode::Msdggs,
                                {"A", "B"});
    CHECK(g.outcome_count() == 1);
    CHECK(g.outcomes().labels[0] == "cycle:A");
    CHECK(g.outcomes().component[0] == g.outcomes().component[1]);
  }
  SUBCASE("gamma2") { CHECK(gamma2().outcome_count() == 4); }
  SUBCASE("dggs merges cycles") {
    const PositionalStructure g({VO::Alice, VO::Bob, VO::Alice, VO::Terminal},
                                {{1, 2}, {1, 3}, {2, 3}, {}}, 0, PositionalMode::Dggs);
    CHECK(g.outcomes().labels == std::vector<std::string>{"v3", "c"});
    const PositionalStructure m({VO::Alice, VO::Bob, VO::Alice, VO::Terminal},
                                {{1, 2}, {1, 3}, {2, 3}, {}}, 0, PositionalMode::Msdggs);
    CHECK(m.outcomes().labels == std::vector<std::string>{"v3", "cycle:v1", "cycle:v2"});
  }
  SUBCASE("unreachable parts are not outcomes") {
    const PositionalStructure g({VO::Alice, VO::Terminal, VO::Bob, VO::Terminal},
                                {{1}, {}, {3}, {}}, 0, PositionalMode::Msdggs);
    CHECK(g.outcome_count() == 1);
    CHECK(g.outcomes().unreachable == std::vector<int>{2, 3});
  }
  SUBCASE("arcs leave components towards smaller ids") {
    std::mt19937_64 rng(51);
    for (int k = 0; k < 100; ++k) {
      const PositionalStructure g = brute::random_positional(rng, 8, PositionalMode::Msdggs);
      const auto& c = g.outcomes().component;
      for (int v = 0; v < g.vertex_count(); ++v) {
        for (int w : g.successors(v)) CHECK(c[w] <= c[v]);
      }
    }
  }
}

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(PositionalStructure({VO::Alice, VO::Terminal}, {{1}, {0}}, 0,
                                      PositionalMode::Msdggs),
                  InvalidInstance);
  CHECK_THROWS_AS(PositionalStructure({VO::Alice, VO::Bob}, {{1}, {}}, 0, PositionalMode::Msdggs),
                  InvalidInstance);
  CHECK_THROWS_AS(PositionalStructure({VO::Alice, VO::Terminal}, {{5}, {}}, 0,
                                      PositionalMode::Msdggs),
                  InvalidInstance);
  CHECK_THROWS_AS(PositionalStructure({VO::Alice, VO::Terminal}, {{1}, {}}, 1,
                                      PositionalMode::Msdggs),
                  InvalidInstance);
  CHECK_THROWS_AS(PositionalStructure({VO::Alice, VO::Terminal}, {{1}, {}}, 0,
                                      PositionalMode::Msdggs, {"x", "x"}),
                  InvalidInstance);
}

TEST_CASE("positional solver examples") {
  const PositionalStructure g = gamma1();
  SUBCASE("Alice takes w1") {
    const Pm1Result r = solve_pm1_positional(g, Pm1Partition(by_label(g, {"w1", "w2"})));
    CHECK(r.winner == Player::Alice);
    CHECK(std::get<PositionalStrategy>(r.strategy.payload).move[0] == 2);
  }
  SUBCASE("Bob answers with w3") {
    const Pm1Result r = solve_pm1_positional(g, Pm1Partition(by_label(g, {"w2"})));
    CHECK(r.winner == Player::Bob);
    CHECK(std::get<PositionalStrategy>(r.strategy.payload).move[1] == 4);
  }
  SUBCASE("cycle and exits all Alice's") {
    const PositionalStructure c = one_cycle();
    const Pm1Result r = solve_pm1_positional(c, Pm1Partition(OutcomeSet::full(c.outcome_count())));
    CHECK(r.winner == Player::Alice);
  }
  SUBCASE("Alice wins by cycling") {
    const PositionalStructure c = one_cycle();
    const OutcomeSet mine = by_label(c, {"cycle:A", "tB"});
    const Pm1Result r = solve_pm1_positional(c, Pm1Partition(mine));
    CHECK(r.winner == Player::Alice);
    CHECK(std::get<PositionalStrategy>(r.strategy.payload).move[0] == 1);
    CHECK(brute::alice_wins(expand_explicit(c), mine));
  }
  SUBCASE("Bob escapes a lone cycle") {
    const PositionalStructure c = one_cycle();
    const Pm1Result r = solve_pm1_positional(c, Pm1Partition(by_label(c, {"cycle:A"})));
    CHECK(r.winner == Player::Bob);
    CHECK(std::get<PositionalStrategy>(r.strategy.payload).move[1] == 3);
  }
}

TEST_CASE("play examples") {
  const PositionalStructure g = gamma1();
  CHECK(play(g, {{1, -1, -1, -1, -1}}, {{-1, 3, -1, -1, -1}}) == 1);
  const PositionalStructure c = one_cycle();
  CHECK(c.outcomes().labels[play(c, {{1, -1, -1, -1}}, {{-1, 0, -1, -1}})] == "cycle:A");
  CHECK_THROWS_AS(play(g, {{3, -1, -1, -1, -1}}, {{-1, 3, -1, -1, -1}}), InvalidInstance);
}

TEST_CASE("expansions of the example structures") {
  CHECK(brute::permutation_equivalent(expand_explicit(gamma1()), brute::form(brute::g(1))));
  CHECK(brute::permutation_equivalent(expand_explicit(gamma2()), brute::form(brute::g(2))));
  CHECK(brute::permutation_equivalent(expand_explicit(gamma3()), brute::form(brute::g(6))));
  CHECK(expand_explicit(gamma1()).cells() == brute::form(brute::g(1)).cells());
}

TEST_CASE("strategy limits") {
  std::vector<VO> owners(14, VO::Alice);
  std::vector<std::vector<int>> succ(14);
  for (int v = 0; v < 13; ++v) succ[v] = {v + 1, 13};
  owners[13] = VO::Terminal;
  const PositionalStructure g(owners, succ, 0, PositionalMode::Msdggs);
  CHECK_THROWS_AS(enumerate_positional_strategies(g, Player::Alice), SizeLimitExceeded);
  CHECK(enumerate_positional_strategies(g, Player::Alice, 8192).size() == 8192);
  CHECK(enumerate_positional_strategies(g, Player::Bob).size() == 1);
}

TEST_CASE("random structures: tightness, agreement and sound witnesses") {
  std::mt19937_64 rng(52);
  for (PositionalMode mode : {PositionalMode::Msdggs, PositionalMode::Dggs}) {
    for (int k = 0; k < 120; ++k) {
      const PositionalStructure g = brute::random_positional(rng, 8, mode, 200, 8);
      const ExplicitGameForm f = expand_explicit(g);
      CHECK(brute::tight(f));
      const auto rows = enumerate_positional_strategies(g, Player::Alice);
      const auto cols = enumerate_positional_strategies(g, Player::Bob);
      const int p = g.outcome_count();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) {
        const Pm1Partition part(OutcomeSet::from_mask(p, m));
        const Pm1Result r = solve_pm1_positional(g, part);
        CHECK((r.winner == Player::Alice) == brute::alice_wins(f, part.omega_a()));
        const auto& s = std::get<PositionalStrategy>(r.strategy.payload);
        const OutcomeSet own = part.winning_set(r.winner);
        if (r.winner == Player::Alice) {
          for (const auto& y : cols) CHECK(own.contains(play(g, s, y)));
          CHECK(row_of(rows, s) < static_cast<int>(rows.size()));
        } else {
          for (const auto& x : rows) CHECK(own.contains(play(g, x, s)));
        }
      }
    }
  }
}

TEST_CASE("tree structures give tight rectangular forms") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    // Grow a random tree: each new vertex hangs below an existing non-terminal.
    const int inner = brute::uniform(rng, 1, 6);
    std::vector<VO> owners;
    std::vector<std::vector<int>> succ;
    owners.push_back(VO::Alice);
    succ.push_back({});
    for (int i = 1; i < inner; ++i) {
      const int parent = brute::uniform(rng, 0, i - 1);
      owners.push_back(brute::uniform(rng, 0, 1) ? VO::Alice : VO::Bob);
      succ.push_back({});
      succ[parent].push_back(i);
    }
    for (int v = 0; v < inner; ++v) {
      const int leaves = succ[v].empty() ? brute::uniform(rng, 1, 2) : brute::uniform(rng, 0, 1);
      for (int l = 0; l < leaves; ++l) {
        succ[v].push_back(static_cast<int>(owners.size()));
        owners.push_back(VO::Terminal);
        succ.push_back({});
      }
    }
    const PositionalStructure g(owners, succ, 0, PositionalMode::Msdggs);
    const ExplicitGameForm f = expand_explicit(g);
    CHECK(brute::tight(f));
    for (int x = 0; x < f.rows(); ++x) {
      for (int y = 0; y < f.cols(); ++y) {
        CHECK((f.row_support(x) & f.col_support(y)) == OutcomeSet(f.outcome_count(), {f(x, y)}));
      }
    }
  }
}
