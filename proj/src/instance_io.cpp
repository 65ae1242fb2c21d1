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

#include "lexsafe/instance_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <type_traits>

#include "lexsafe/errors.hpp"

namespace lexsafe {

namespace {

using LabelIndex = std::map<std::string, int>;

LabelIndex index_labels(const std::vector<std::string>& labels) {
  LabelIndex idx;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    if (!idx.emplace(labels[i], i).second) {
      throw InvalidInstance("duplicate outcome label '" + labels[i] + "'");
    }
  }
  return idx;
}

int lookup(const LabelIndex& idx, const std::string& label, const char* where) {
  auto it = idx.find(label);
  if (it == idx.end()) {
    throw InvalidInstance(std::string(where) + ": unknown label '" + label + "'");
  }
  return it->second;
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InvalidInstance(std::string("missing field '") + name + "'");
  }
  return obj.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInstance(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) {
      throw InvalidInstance(std::string(what) + " must contain strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

OutcomeSet label_set(const Json& j, const LabelIndex& idx, int p, const char* what) {
  OutcomeSet s(p);
  for (const auto& l : string_list(j, what)) s.insert(lookup(idx, l, what));
  return s;
}

OracleInstance parse_explicit(const Json& o) {
  const auto labels = string_list(field(o, "outcomes"), "outcomes");
  const auto idx = index_labels(labels);
  const Json& m = field(o, "matrix");
  if (!m.is_array() || m.empty()) throw InvalidInstance("matrix must be a nonempty array");
  std::vector<std::vector<OutcomeId>> rows;
  for (const auto& row : m) {
    std::vector<OutcomeId> r;
    for (const auto& l : string_list(row, "matrix row")) r.push_back(lookup(idx, l, "matrix"));
    rows.push_back(std::move(r));
  }
  ExplicitGameForm form = ExplicitGameForm::from_rows(rows, static_cast<int>(labels.size()));
  if (!form.is_surjective()) {
    throw InvalidInstance("matrix does not use every listed outcome");
  }
  return OracleInstance(std::move(form), labels);
}

OracleInstance parse_monotone(const Json& o) {
  const auto labels = string_list(field(o, "outcomes"), "outcomes");
  const auto idx = index_labels(labels);
  const int p = static_cast<int>(labels.size());
  const Json& g = field(o, "generators");
  if (!g.is_array()) throw InvalidInstance("generators must be an array");
  std::vector<OutcomeSet> gens;
  for (const auto& e : g) gens.push_back(label_set(e, idx, p, "generator"));
  return OracleInstance(MonotonePropertyForm(p, std::move(gens)), labels);
}

OracleInstance parse_positional(const Json& o) {
  const std::string mode = field(o, "mode").get<std::string>();
  if (mode != "dggs" && mode != "msdggs") {
    throw InvalidInstance("mode must be 'dggs' or 'msdggs'");
  }
  const Json& vs = field(o, "vertices");
  if (!vs.is_array() || vs.empty()) throw InvalidInstance("vertices must be a nonempty array");
  std::vector<std::string> names;
  for (const auto& v : vs) names.push_back(field(v, "name").get<std::string>());
  const LabelIndex idx = index_labels(names);
  std::vector<VertexOwner> owners;
  std::vector<std::vector<int>> succ;
  for (const auto& v : vs) {
    const std::string owner = field(v, "owner").get<std::string>();
    if (owner == "alice") {
      owners.push_back(VertexOwner::Alice);
    } else if (owner == "bob") {
      owners.push_back(VertexOwner::Bob);
    } else if (owner == "terminal") {
      owners.push_back(VertexOwner::Terminal);
    } else {
      throw InvalidInstance("vertex owner must be alice, bob or terminal");
    }
    std::vector<int> moves;
    if (v.contains("moves")) {
      for (const auto& t : string_list(v.at("moves"), "moves")) {
        moves.push_back(lookup(idx, t, "moves"));
      }
    }
    succ.push_back(std::move(moves));
  }
  const int initial = lookup(idx, field(o, "initial").get<std::string>(), "initial");
  PositionalStructure g(std::move(owners), std::move(succ), initial,
                        mode == "dggs" ? PositionalMode::Dggs : PositionalMode::Msdggs,
                        names);
  return OracleInstance(std::move(g));
}

OracleInstance parse_jordan(const Json& o) {
  const auto labels = string_list(field(o, "areas"), "areas");
  const auto idx = index_labels(labels);
  std::vector<std::pair<int, int>> adj;
  const Json& a = field(o, "adjacency");
  if (!a.is_array()) throw InvalidInstance("adjacency must be an array");
  for (const auto& e : a) {
    const auto pair = string_list(e, "adjacency pair");
    if (pair.size() != 2) throw InvalidInstance("adjacency pairs need two areas");
    adj.emplace_back(lookup(idx, pair[0], "adjacency"), lookup(idx, pair[1], "adjacency"));
  }
  const Json& sides = field(o, "sides");
  std::array<std::vector<int>, 4> contacts;
  const char* keys[] = {"north", "east", "south", "west"};
  for (int s = 0; s < 4; ++s) {
    for (const auto& l : string_list(field(sides, keys[s]), keys[s])) {
      contacts[s].push_back(lookup(idx, l, keys[s]));
    }
  }
  return OracleInstance(JordanMap(static_cast<int>(labels.size()), adj, contacts),
                        labels);
}

std::int64_t json_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInstance(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

OracleInstance parse_bargaining(const Json& o) {
  const auto m = json_integer(field(o, "m"), "m");
  const auto n = json_integer(field(o, "n"), "n");
  if (m < 1 || n < 1 || m > 1000000 || n > 1000000) {
    throw InvalidInstance("m and n must lie in [1, 10^6]");
  }
  return OracleInstance(MbScheme(static_cast<int>(m), static_cast<int>(n)));
}

OracleInstance parse_veto(const Json& o) {
  VetoScheme v;
  v.mu_a = json_integer(field(o, "mu_a"), "mu_a");
  v.mu_b = json_integer(field(o, "mu_b"), "mu_b");
  const Json& l = field(o, "lambda");
  if (!l.is_array()) throw InvalidInstance("lambda must be an array");
  for (const auto& e : l) v.lambda.push_back(json_integer(e, "lambda"));
  std::vector<std::string> labels;
  if (o.contains("candidates")) labels = string_list(o.at("candidates"), "candidates");
  return OracleInstance(std::move(v), std::move(labels));
}

Instance parse_checked(const Json& doc) {
  if (!doc.is_object()) throw InvalidInstance("instance must be a JSON object");
  const Json& ver = field(doc, "schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion) {
    throw InvalidInstance("unsupported schema_version (expected 1)");
  }
  const Json& o = field(doc, "oracle");
  const std::string type = field(o, "type").get<std::string>();
  std::optional<OracleInstance> oracle;
  if (type == "explicit") {
    oracle = parse_explicit(o);
  } else if (type == "monotone") {
    oracle = parse_monotone(o);
  } else if (type == "positional") {
    oracle = parse_positional(o);
  } else if (type == "jordan") {
    oracle = parse_jordan(o);
  } else if (type == "bargaining") {
    oracle = parse_bargaining(o);
  } else if (type == "veto") {
    oracle = parse_veto(o);
  } else {
    throw InvalidInstance("unknown oracle type '" + type + "'");
  }
  Instance inst{std::move(*oracle), std::nullopt, std::nullopt, {}};

  if (doc.contains("preferences")) {
    const Json& prefs = doc.at("preferences");
    const auto& labels = inst.oracle.labels();
    if (prefs.contains("alice")) {
      const auto raw = string_list(prefs.at("alice"), "preferences.alice");
      inst.pref_a = validate_preference(raw, labels);
    }
    if (prefs.contains("bob")) {
      const auto raw = string_list(prefs.at("bob"), "preferences.bob");
      inst.pref_b = validate_preference(raw, labels);
    }
  }
  if (doc.contains("options")) {
    const Json& opt = doc.at("options");
    if (opt.contains("dichotomy")) inst.options.dichotomy = opt.at("dichotomy").get<bool>();
    if (opt.contains("limit_expansion")) {
      const auto n = json_integer(opt.at("limit_expansion"), "limit_expansion");
      if (n < 1) throw InvalidInstance("limit_expansion must be positive");
      inst.options.limit_expansion = static_cast<std::uint64_t>(n);
    }
    if (opt.contains("mb_sweep")) {
      const std::string s = opt.at("mb_sweep").get<std::string>();
      if (s == "one_sided") {
        inst.options.mb_sweep = MbSweep::OneSided;
      } else if (s == "alternating") {
        inst.options.mb_sweep = MbSweep::Alternating;
      } else {
        throw InvalidInstance("mb_sweep must be 'one_sided' or 'alternating'");
      }
    }
  }
  inst.oracle.set_mb_sweep(inst.options.mb_sweep);
  return inst;
}

}  // namespace

Instance parse_instance(const Json& doc) {
  try {
    return parse_checked(doc);
  } catch (const Json::exception& e) {
    throw InvalidInstance(std::string("malformed instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInstance("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_instance(doc);
}

Json explicit_instance_json(const ExplicitGameForm& form,
                            const std::vector<std::string>& labels,
                            const std::optional<Preference>& pref_a,
                            const std::optional<Preference>& pref_b) {
  Json matrix = Json::array();
  for (int x = 0; x < form.rows(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < form.cols(); ++y) row.push_back(labels[form(x, y)]);
    matrix.push_back(std::move(row));
  }
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["oracle"] = {{"type", "explicit"}, {"outcomes", labels}, {"matrix", matrix}};
  auto pref_json = [&](const Preference& p) {
    Json a = Json::array();
    for (OutcomeId w : p.worst_to_best()) a.push_back(labels[w]);
    return a;
  };
  if (pref_a || pref_b) {
    Json prefs = Json::object();
    if (pref_a) prefs["alice"] = pref_json(*pref_a);
    if (pref_b) prefs["bob"] = pref_json(*pref_b);
    doc["preferences"] = std::move(prefs);
  }
  return doc;
}

ExpansionLimits limits_with_override(std::optional<std::uint64_t> per_player) {
  ExpansionLimits limits;
  if (per_player) {
    limits.positional = *per_player;
    limits.bargaining = *per_player;
    limits.veto = *per_player;
  }
  return limits;
}

Json set_json(const OutcomeSet& s, const std::vector<std::string>& labels) {
  Json a = Json::array();
  for (OutcomeId w : s.members()) a.push_back(labels[w]);
  return a;
}

OutcomeSet set_from_json(const Json& j, const std::vector<std::string>& labels) {
  return label_set(j, index_labels(labels), static_cast<int>(labels.size()),
                   "outcome set");
}

Json strategy_json(const OracleInstance& oracle, const StrategyHandle& h) {
  Json j;
  j["owner"] = player_name(h.owner);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitStrategy>) {
          j["kind"] = h.owner == Player::Alice ? "row" : "column";
          j["index"] = s.index + 1;
        } else if constexpr (std::is_same_v<T, SetStrategy>) {
          j["kind"] = "set";
          j["outcomes"] = set_json(s.outcomes, oracle.labels());
        } else if constexpr (std::is_same_v<T, PositionalStrategy>) {
          const auto& g = oracle.as<PositionalStructure>();
          j["kind"] = "positional";
          Json moves = Json::object();
          for (int v = 0; v < g.vertex_count(); ++v) {
            if (s.move[v] >= 0) moves[g.name(v)] = g.name(s.move[v]);
          }
          j["moves"] = std::move(moves);
        } else if constexpr (std::is_same_v<T, MonotoneMap>) {
          j["kind"] = "monotone_map";
          Json image = Json::array();
          for (int b : s.image) image.push_back(b + 1);
          j["image"] = std::move(image);
        } else {
          j["kind"] = "cards";
          j["cards"] = s.cards;
        }
      },
      h.payload);
  return j;
}

StrategyHandle strategy_from_json(const OracleInstance& oracle, const Json& j) {
  try {
    const std::string owner_s = field(j, "owner").get<std::string>();
    if (owner_s != "alice" && owner_s != "bob") {
      throw InvalidInstance("strategy owner must be alice or bob");
    }
    const Player owner = owner_s == "alice" ? Player::Alice : Player::Bob;
    const std::string kind = field(j, "kind").get<std::string>();
    StrategyHandle h{owner, ExplicitStrategy{}};
    switch (oracle.kind()) {
      case BackendKind::Explicit: {
        const auto& f = oracle.as<ExplicitGameForm>();
        const int idx = static_cast<int>(json_integer(field(j, "index"), "index")) - 1;
        const int count = owner == Player::Alice ? f.rows() : f.cols();
        if (kind != (owner == Player::Alice ? "row" : "column") || idx < 0 || idx >= count) {
          throw InvalidInstance("bad explicit strategy");
        }
        h.payload = ExplicitStrategy{idx};
        break;
      }
      case BackendKind::Monotone:
        if (kind != "set") throw InvalidInstance("expected a set strategy");
        h.payload = SetStrategy{set_from_json(field(j, "outcomes"), oracle.labels())};
        break;
      case BackendKind::Jordan: {
        if (kind != "set") throw InvalidInstance("expected a set strategy");
        const auto& map = oracle.as<JordanMap>();
        const auto [from, to] = connector_sides(owner);
        const OutcomeSet areas = set_from_json(field(j, "outcomes"), oracle.labels());
        if (!connects(map, areas, from, to)) {
          throw InvalidInstance("connector does not join the player's sides");
        }
        h.payload = SetStrategy{minimize_connector(map, areas, from, to)};
        break;
      }
      case BackendKind::Positional: {
        const auto& g = oracle.as<PositionalStructure>();
        if (kind != "positional") throw InvalidInstance("expected a positional strategy");
        const Json& moves = field(j, "moves");
        const LabelIndex idx = index_labels(g.names());
        PositionalStrategy s{std::vector<int>(g.vertex_count(), -1)};
        const VertexOwner tag = owner == Player::Alice ? VertexOwner::Alice : VertexOwner::Bob;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (g.owner(v) != tag) continue;
          const int to = lookup(idx, field(moves, g.name(v).c_str()).get<std::string>(), "moves");
          const auto& succ = g.successors(v);
          if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
            throw InvalidInstance("strategy moves along a missing arc at '" + g.name(v) + "'");
          }
          s.move[v] = to;
        }
        h.payload = std::move(s);
        break;
      }
      case BackendKind::Bargaining: {
        if (kind != "monotone_map") throw InvalidInstance("expected a monotone map");
        MonotoneMap m{owner, {}};
        for (const auto& e : field(j, "image")) {
          m.image.push_back(static_cast<int>(json_integer(e, "image")) - 1);
        }
        if (!is_monotone(oracle.as<MbScheme>(), m)) {
          throw InvalidInstance("map is not monotone or has the wrong length");
        }
        h.payload = std::move(m);
        break;
      }
      case BackendKind::Veto: {
        const auto& v = oracle.as<VetoScheme>();
        if (kind != "cards") throw InvalidInstance("expected a card distribution");
        CardDistribution d{owner, {}};
        std::int64_t sum = 0;
        for (const auto& e : field(j, "cards")) {
          d.cards.push_back(json_integer(e, "cards"));
          if (d.cards.back() < 0) throw InvalidInstance("negative card count");
          sum += d.cards.back();
        }
        if (static_cast<int>(d.cards.size()) != v.outcome_count() || sum != v.budget(owner)) {
          throw InvalidInstance("card distribution does not match the budget");
        }
        h.payload = std::move(d);
        break;
      }
    }
    return h;
  } catch (const Json::exception& e) {
    throw InvalidInstance(std::string("malformed strategy: ") + e.what());
  }
}

Json equilibrium_json(const OracleInstance& oracle, const LexsafeNe& ne,
                      bool certified) {
  const auto& labels = oracle.labels();
  Json j;
  j["player"] = player_name(ne.player);
  j["x"] = strategy_json(oracle, ne.x_strategy);
  j["y"] = strategy_json(oracle, ne.y_strategy);
  j["support_own"] = set_json(ne.support_own, labels);
  j["support_other"] = set_json(ne.support_other, labels);
  j["ne_outcome"] = labels[ne.ne_outcome];
  j["queries"] = {{"lexmax", ne.lexmax_queries},
                  {"complement", ne.complement_queries},
                  {"total", ne.queries_used()}};
  j["certified"] = certified;
  return j;
}

}  // namespace lexsafe
