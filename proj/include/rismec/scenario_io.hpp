// Copyright 2026 The rismec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISMEC_SCENARIO_IO_HPP
#define RISMEC_SCENARIO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "rismec/scenario.hpp"

namespace rismec {

// Scenario documents are a small TOML-like format:
//
//   delta_s = 60            # top-level keys and [sim] share one namespace
//   case = "case3"
//   [radio]  [task]  [sim]
//   [[server]]  [[ris]]  [[user]]   (repeatable blocks)
//
// Values are numbers, true/false, "strings", or one-line arrays of either.
// Keys left out take the default_scenario() value. Any [[server]], [[ris]]
// or [[user]] block replaces the whole default list of that kind.

// Throws ConfigError on syntax/unknown key/type problems and
// ValidationError when the resulting scenario is invalid.
ScenarioConfig load_scenario(std::string_view text);

ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// Writes every field; load_scenario(serialize_scenario(c)) == c.
std::string serialize_scenario(const ScenarioConfig& config);

} // namespace rismec

#endif
