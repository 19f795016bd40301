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

#ifndef RISMEC_SCENARIO_HPP
#define RISMEC_SCENARIO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rismec/errors.hpp"

namespace rismec {

// Cartesian position in meters; the ground plane is z = 0.
struct Position3D
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Position3D&) const = default;
};

double distance(const Position3D& a, const Position3D& b) noexcept;

// MEC tiers in their fixed selection order.
enum class Tier : std::uint8_t { Ground = 0, Air = 1, Space = 2, SpaceCluster = 3 };

inline constexpr std::size_t kTierCount = 4;
inline constexpr std::array<Tier, kTierCount> kTierOrder = {Tier::Ground, Tier::Air, Tier::Space,
                                                            Tier::SpaceCluster};

constexpr std::size_t tier_index(Tier t) noexcept { return static_cast<std::size_t>(t); }
constexpr bool is_space_tier(Tier t) noexcept { return t == Tier::Space || t == Tier::SpaceCluster; }

std::string_view tier_name(Tier t) noexcept;             // "ground", "air", "space", "space_cluster"
std::string_view tier_label(Tier t) noexcept;            // "Ground", "Air", ...
std::optional<Tier> parse_tier(std::string_view name) noexcept;

struct ServerSpec
{
    Tier tier = Tier::Ground;
    Position3D position;
    double capacity_cps = 0.0;  // per server (per satellite for SpaceCluster)
    int count = 1;              // co-located identical servers
    int cluster_size = 1;       // SpaceCluster only
    int max_concurrent = 1;     // admission slots of the platform

    bool operator==(const ServerSpec&) const = default;
};

// Aggregate compute of the platform described by `spec`.
double platform_capacity_cps(const ServerSpec& spec) noexcept;

// Admission slots used when a scenario document omits max_concurrent.
int default_max_concurrent(Tier tier, int cluster_size) noexcept;

struct RisSpec
{
    int id = 0;
    Position3D position;
    int n_elements = 0;
    Tier segment = Tier::Ground;

    bool operator==(const RisSpec&) const = default;
};

struct TaskProfile
{
    double input_bits = 0.0;
    double cycles = 0.0;
    double result_bits = 0.0;

    bool operator==(const TaskProfile&) const = default;
};

struct RadioParams
{
    double tx_power_dbm = 30.0;
    double bandwidth_hz = 1e7;     // per tier
    double noise_dbm = -94.0;      // total over the band
    double carrier_hz = 2e9;
    double nlos_exponent = 3.0;
    double los_exponent = 2.0;
    double ris_segment_exponent = 2.2;
    double reference_loss_db = 38.46;

    bool operator==(const RadioParams&) const = default;
};

struct UserSpec
{
    Position3D position;
    std::optional<TaskProfile> task;  // overrides ScenarioConfig::task

    bool operator==(const UserSpec&) const = default;
};

enum class CaseId : std::uint8_t { Case1, Case2, Case3, Custom };

std::string_view case_name(CaseId c) noexcept;           // "case1" ... "custom"
std::optional<CaseId> parse_case(std::string_view name) noexcept;

struct ScenarioConfig
{
    // Explicit population. When empty, user_count users are drawn from the seed.
    std::vector<UserSpec> users;
    std::size_t user_count = 30;
    std::vector<ServerSpec> servers;
    std::vector<RisSpec> rises;
    RadioParams radio;
    TaskProfile task;
    double delta_s = 60.0;
    CaseId case_id = CaseId::Case3;
    std::vector<Tier> custom_tiers;  // Custom case only
    bool ris_enabled = true;
    int max_cycles = 100;
    std::uint64_t seed = 1;
    double user_area_m = 200.0;

    bool operator==(const ScenarioConfig&) const = default;
};

using TierMask = std::array<bool, kTierCount>;

// Tiers a user may offload to under `c` (custom_tiers consulted for Custom).
TierMask enabled_tiers(CaseId c, const std::vector<Tier>& custom_tiers = {});
TierMask enabled_tiers(const ScenarioConfig& config);

// The server backing `tier`, or nullptr when the scenario has none.
const ServerSpec* find_server(const ScenarioConfig& config, Tier tier) noexcept;

ScenarioConfig default_scenario();

// Every broken invariant, in field order. Empty means valid.
std::vector<Violation> validate(const ScenarioConfig& config);

void require_valid(const ScenarioConfig& config);

} // namespace rismec

#endif
