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

#ifndef LEXSAFE_INSTANCE_IO_HPP_
#define LEXSAFE_INSTANCE_IO_HPP_

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lexsafe/core.hpp"
#include "lexsafe/explicit_form.hpp"
#include "lexsafe/lex_engine.hpp"
#include "lexsafe/oracle.hpp"
#include "lexsafe/strategy.hpp"

namespace lexsafe {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct InstanceOptions {
  bool dichotomy = false;
  std::optional<std::uint64_t> limit_expansion;
  MbSweep mb_sweep = MbSweep::OneSided;
};

/// A parsed instance file.
struct Instance {
  OracleInstance oracle;
  std::optional<Preference> pref_a;
  std::optional<Preference> pref_b;
  InstanceOptions options;
};

/// Throws InvalidInstance (or InvalidPreference, InvalidMap) on any schema
/// or semantic error. Preferences are optional.
Instance parse_instance(const Json& doc);
Instance load_instance(const std::string& path);

/// Label-based explicit instance; parse_instance() accepts it back.
Json explicit_instance_json(const ExplicitGameForm& form,
                            const std::vector<std::string>& labels,
                            const std::optional<Preference>& pref_a,
                            const std::optional<Preference>& pref_b);

/// Per-player strategy limit used by expand() when a flag overrides it.
ExpansionLimits limits_with_override(std::optional<std::uint64_t> per_player);

Json set_json(const OutcomeSet& s, const std::vector<std::string>& labels);
OutcomeSet set_from_json(const Json& j, const std::vector<std::string>& labels);

Json strategy_json(const OracleInstance& oracle, const StrategyHandle& h);
StrategyHandle strategy_from_json(const OracleInstance& oracle, const Json& j);

Json equilibrium_json(const OracleInstance& oracle, const LexsafeNe& ne,
                      bool certified);

}  // namespace lexsafe

#endif  // LEXSAFE_INSTANCE_IO_HPP_
