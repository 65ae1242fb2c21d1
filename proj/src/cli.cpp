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

#include "lexsafe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lexsafe/errors.hpp"
#include "lexsafe/instance_io.hpp"
#include "lexsafe/lex_engine.hpp"

namespace lexsafe {

namespace {

struct Flags {
  std::string instance_path;
  std::string report_path;
  std::string player = "both";
  bool dichotomy = false;
  std::optional<std::uint64_t> limit_expansion;
  std::uint64_t seed = 1;
  std::string omega_a;
  int partitions = 256;
  int preference_pairs = 20;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::vector<Player> players_of(const std::string& s) {
  if (s == "alice") return {Player::Alice};
  if (s == "bob") return {Player::Bob};
  return {Player::Alice, Player::Bob};
}

ExpansionLimits limits_for(const Flags& f, const Instance& inst) {
  return limits_with_override(f.limit_expansion ? f.limit_expansion
                                                : inst.options.limit_expansion);
}

Json preferences_json(const Instance& inst) {
  const auto& labels = inst.oracle.labels();
  auto seq = [&](const Preference& p) {
    Json a = Json::array();
    for (OutcomeId w : p.worst_to_best()) a.push_back(labels[w]);
    return a;
  };
  return {{"alice", seq(*inst.pref_a)}, {"bob", seq(*inst.pref_b)}};
}

void require_preferences(const Instance& inst) {
  if (!inst.pref_a || !inst.pref_b) {
    throw InvalidInstance("this command needs preferences for alice and bob");
  }
}

void require_tight_if_explicit(const Instance& inst) {
  if (inst.oracle.kind() != BackendKind::Explicit ||
      inst.oracle.outcome_count() > kDefaultTightnessLimit) {
    return;
  }
  const TightnessReport t = is_tight(inst.oracle.as<ExplicitGameForm>());
  if (!t.tight) {
    throw NotTight("game form is not tight: nobody wins with omega_a = " +
                   format_set(*t.failing_omega_a, inst.oracle.labels()));
  }
}

LexsafeNe compute(const Instance& inst, Player player, bool dichotomy) {
  const Preference& own = player == Player::Alice ? *inst.pref_a : *inst.pref_b;
  const Preference& other = player == Player::Alice ? *inst.pref_b : *inst.pref_a;
  return lexsafe_ne(inst.oracle, own, other, player,
                    LexOptions{dichotomy || inst.options.dichotomy});
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  require_preferences(inst);
  require_tight_if_explicit(inst);
  Json eqs = Json::array();
  bool all = true;
  for (Player p : players_of(f.player)) {
    const LexsafeNe ne = compute(inst, p, f.dichotomy);
    const bool ok = certify_ne(ne, *inst.pref_a, *inst.pref_b);
    all = all && ok;
    eqs.push_back(equilibrium_json(inst.oracle, ne, ok));
  }
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = "solve";
  report["backend"] = backend_name(inst.oracle.kind());
  report["labels"] = inst.oracle.labels();
  report["preferences"] = preferences_json(inst);
  report["equilibria"] = std::move(eqs);
  report["certified"] = all;
  emit(out, report);
  return all ? kExitOk : kExitInternal;
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_pm1(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  const auto& labels = inst.oracle.labels();
  Json raw = Json::array();
  for (const auto& l : split_labels(f.omega_a)) raw.push_back(l);
  const Pm1Partition part(set_from_json(raw, labels));
  const Pm1Result r = solve_pm1(inst.oracle, part);
  Json j;
  j["winner"] = player_name(r.winner);
  j["omega_a"] = set_json(part.omega_a(), labels);
  j["omega_b"] = set_json(part.omega_b(), labels);
  j["strategy"] = strategy_json(inst.oracle, r.strategy);
  j["queries_used"] = r.queries_used;
  emit(out, j);
  return kExitOk;
}

int cmd_tight(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  const ExplicitGameForm form = expand(inst.oracle, limits_for(f, inst));
  const TightnessReport t = is_tight(form);
  Json j;
  j["tight"] = t.tight;
  j["rows"] = form.rows();
  j["cols"] = form.cols();
  if (t.failing_omega_a) {
    const auto& labels = inst.oracle.labels();
    j["failing_partition"] = {{"omega_a", set_json(*t.failing_omega_a, labels)},
                              {"omega_b", set_json(t.failing_omega_a->complement(), labels)}};
  }
  emit(out, j);
  return kExitOk;
}

int cmd_expand(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  const ExplicitGameForm form = expand(inst.oracle, limits_for(f, inst));
  if (!form.is_surjective()) {
    throw InvalidInstance("the expansion does not reach every outcome");
  }
  emit(out, explicit_instance_json(form, inst.oracle.labels(), inst.pref_a, inst.pref_b));
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  require_preferences(inst);
  Json report;
  {
    std::ifstream in(f.report_path);
    if (!in) throw InvalidInstance("cannot open '" + f.report_path + "'");
    try {
      report = Json::parse(in);
    } catch (const Json::exception& e) {
      throw InvalidInstance(std::string("report is not valid JSON: ") + e.what());
    }
  }
  const auto& labels = inst.oracle.labels();
  std::vector<std::string> problems;
  try {
    if (report.at("schema_version").get<int>() != kSchemaVersion) {
      problems.push_back("unsupported report schema_version");
    }
    if (report.at("labels").get<std::vector<std::string>>() != labels) {
      problems.push_back("label table differs from the instance");
    }
    for (const auto& e : report.at("equilibria")) {
      const std::string who = e.at("player").get<std::string>();
      if (who != "alice" && who != "bob") {
        problems.push_back("unknown player '" + who + "'");
        continue;
      }
      LexsafeNe claimed;
      claimed.player = who == "alice" ? Player::Alice : Player::Bob;
      claimed.x_strategy = strategy_from_json(inst.oracle, e.at("x"));
      claimed.y_strategy = strategy_from_json(inst.oracle, e.at("y"));
      claimed.support_own = set_from_json(e.at("support_own"), labels);
      claimed.support_other = set_from_json(e.at("support_other"), labels);
      Json star = Json::array({e.at("ne_outcome")});
      claimed.ne_outcome = set_from_json(star, labels).first();
      const std::string tag = who + ": ";
      if (claimed.x_strategy.owner != Player::Alice ||
          claimed.y_strategy.owner != Player::Bob) {
        problems.push_back(tag + "strategy owners are swapped");
        continue;
      }
      if (!certify_ne(claimed, *inst.pref_a, *inst.pref_b)) {
        problems.push_back(tag + "supports and outcome fail certification");
      }
      if (outcome_of(inst.oracle, claimed.x_strategy, claimed.y_strategy) !=
          claimed.ne_outcome) {
        problems.push_back(tag + "the strategies do not produce the stated outcome");
      }
      const LexsafeNe fresh = compute(inst, claimed.player, false);
      if (fresh.support_own != claimed.support_own ||
          fresh.support_other != claimed.support_other ||
          fresh.ne_outcome != claimed.ne_outcome) {
        problems.push_back(tag + "recomputation gives a different equilibrium");
      }
    }
  } catch (const Json::exception& e) {
    problems.push_back(std::string("malformed report: ") + e.what());
  } catch (const InvalidInstance& e) {
    problems.push_back(std::string("invalid report content: ") + e.what());
  }
  Json j;
  j["verified"] = problems.empty();
  j["problems"] = problems;
  emit(out, j);
  return problems.empty() ? kExitOk : kExitCheckFailed;
}

std::optional<int> index_of(const std::vector<StrategyHandle>& list,
                            const StrategyHandle& h) {
  const auto it = std::find(list.begin(), list.end(), h);
  if (it == list.end()) return std::nullopt;
  return static_cast<int>(it - list.begin());
}

int cmd_check(const Flags& f, std::ostream& out) {
  const Instance inst = load_instance(f.instance_path);
  const ExpansionLimits limits = limits_for(f, inst);
  const ExplicitGameForm form = expand(inst.oracle, limits);
  const auto rows = enumerate_strategies(inst.oracle, Player::Alice, limits);
  const auto cols = enumerate_strategies(inst.oracle, Player::Bob, limits);
  const int p = inst.oracle.outcome_count();
  std::mt19937_64 rng(f.seed);
  std::vector<std::string> mismatches;

  std::vector<OutcomeSet> parts;
  if (p <= 12) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) {
      parts.push_back(OutcomeSet::from_mask(p, m));
    }
  } else {
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < f.partitions; ++k) {
      OutcomeSet s(p);
      for (int w = 0; w < p; ++w) {
        if (coin(rng)) s.insert(w);
      }
      parts.push_back(std::move(s));
    }
  }
  for (const auto& a : parts) {
    const Pm1Partition part(a);
    const Pm1Result r = solve_pm1(inst.oracle, part);
    const std::string where = "omega_a = " + format_set(a, inst.oracle.labels());
    Player expected;
    try {
      expected = solve_pm1_explicit(form, part).winner;
    } catch (const NotTight&) {
      mismatches.push_back(where + ": the expansion is not tight here");
      continue;
    }
    if (r.winner != expected) {
      mismatches.push_back(where + ": oracle and expansion disagree on the winner");
    }
    const auto& list = r.winner == Player::Alice ? rows : cols;
    const auto idx = index_of(list, r.strategy);
    if (!idx || !form.support(r.winner, *idx).is_subset_of(part.winning_set(r.winner))) {
      mismatches.push_back(where + ": witness is not a winning strategy");
    }
  }

  std::vector<OutcomeId> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < f.preference_pairs; ++k) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const Preference pa(perm);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Preference pb(perm);
    for (Player pl : {Player::Alice, Player::Bob}) {
      const LexsafeNe ne = lexsafe_ne(inst.oracle, pl == Player::Alice ? pa : pb,
                                      pl == Player::Alice ? pb : pa, pl);
      const auto x = index_of(rows, ne.x_strategy);
      const auto y = index_of(cols, ne.y_strategy);
      if (!certify_ne(ne, pa, pb) || !x || !y ||
          !is_nash(form, pa, pb, Situation{*x, *y}) ||
          form(*x, *y) != ne.ne_outcome) {
        mismatches.push_back("preference pair " + std::to_string(k) + ", " +
                             player_name(pl) + ": lexsafe pair is not a certified NE");
      }
    }
  }

  Json j;
  j["seed"] = f.seed;
  j["partitions_checked"] = parts.size();
  j["preference_pairs"] = f.preference_pairs;
  j["mismatches"] = mismatches;
  j["ok"] = mismatches.empty();
  emit(out, j);
  return mismatches.empty() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicographically safe Nash equilibria of tight game forms"};
  app.require_subcommand(1);
  Flags f;

  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit-expansion", f.limit_expansion,
                    "Per-player strategy cap for expansions")
        ->check(CLI::PositiveNumber);
  };

  auto* solve = app.add_subcommand("solve", "Compute lexsafe equilibria");
  solve->add_option("instance", f.instance_path, "Instance file")->required();
  solve->add_option("--player", f.player, "alice, bob or both")
      ->check(CLI::IsMember({"alice", "bob", "both"}));
  solve->add_flag("--dichotomy", f.dichotomy, "Binary search in the lexmax scan");

  auto* pm1 = app.add_subcommand("pm1", "Solve one +-1 game");
  pm1->add_option("instance", f.instance_path, "Instance file")->required();
  pm1->add_option("--omega-a", f.omega_a, "Comma-separated labels Alice wins on")
      ->required();

  auto* tight = app.add_subcommand("tight", "Test tightness of the expanded form");
  tight->add_option("instance", f.instance_path, "Instance file")->required();
  add_limit(tight);

  auto* exp = app.add_subcommand("expand", "Print the explicit normal form");
  exp->add_option("instance", f.instance_path, "Instance file")->required();
  add_limit(exp);

  auto* verify = app.add_subcommand("verify", "Re-certify a solve report");
  verify->add_option("report", f.report_path, "Report file")->required();
  verify->add_option("instance", f.instance_path, "Instance file")->required();

  auto* check = app.add_subcommand("check", "Cross-validate the oracle on its expansion");
  check->add_option("instance", f.instance_path, "Instance file")->required();
  check->add_option("--seed", f.seed, "Random seed");
  check->add_option("--partitions", f.partitions, "Random partitions when p > 12")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--preferences", f.preference_pairs, "Random preference pairs")
      ->check(CLI::NonNegativeNumber);
  add_limit(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (solve->parsed()) return cmd_solve(f, out);
    if (pm1->parsed()) return cmd_pm1(f, out);
    if (tight->parsed()) return cmd_tight(f, out);
    if (exp->parsed()) return cmd_expand(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    return cmd_check(f, out);
  } catch (const InvalidInstance& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NotTight& e) {
    err << "not tight: " << e.what() << "\n";
    return kExitNotTight;
  } catch (const SizeLimitExceeded& e) {
    err << "size limit: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lexsafe
