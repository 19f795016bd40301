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

#include "rismec/scenario.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace rismec {

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid scenario:";
          for (const auto& v : violations)
              msg += fmt::format(" [{}] {} ({});", v.code, v.message, v.field);
          return msg;
      }()),
      violations_(std::move(violations))
{
}

double distance(const Position3D& a, const Position3D& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

std::string_view tier_name(Tier t) noexcept
{
    switch (t) {
    case Tier::Ground: return "ground";
    case Tier::Air: return "air";
    case Tier::Space: return "space";
    case Tier::SpaceCluster: return "space_cluster";
    }
    return "?";
}

std::string_view tier_label(Tier t) noexcept
{
    switch (t) {
    case Tier::Ground: return "Ground";
    case Tier::Air: return "Air";
    case Tier::Space: return "Space";
    case Tier::SpaceCluster: return "SpaceCluster";
    }
    return "?";
}

std::optional<Tier> parse_tier(std::string_view name) noexcept
{
    for (Tier t : kTierOrder)
        if (tier_name(t) == name)
            return t;
    return std::nullopt;
}

std::string_view case_name(CaseId c) noexcept
{
    switch (c) {
    case CaseId::Case1: return "case1";
    case CaseId::Case2: return "case2";
    case CaseId::Case3: return "case3";
    case CaseId::Custom: return "custom";
    }
    return "?";
}

std::optional<CaseId> parse_case(std::string_view name) noexcept
{
    for (CaseId c : {CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::Custom})
        if (case_name(c) == name)
            return c;
    return std::nullopt;
}

double platform_capacity_cps(const ServerSpec& spec) noexcept
{
    double cap = spec.capacity_cps * spec.count;
    if (spec.tier == Tier::SpaceCluster)
        cap *= spec.cluster_size;
    return cap;
}

int default_max_concurrent(Tier tier, int cluster_size) noexcept
{
    // Ground slots belong to the radio cell, so they do not grow with the
    // number of co-located servers.
    switch (tier) {
    case Tier::Ground: return 10;
    case Tier::Air: return 6;
    case Tier::Space: return 2;
    case Tier::SpaceCluster: return 2 * std::max(cluster_size, 1);
    }
    return 1;
}

TierMask enabled_tiers(CaseId c, const std::vector<Tier>& custom_tiers)
{
    TierMask mask{};
    switch (c) {
    case CaseId::Case3: mask[tier_index(Tier::Space)] = true; [[fallthrough]];
    case CaseId::Case2: mask[tier_index(Tier::Air)] = true; [[fallthrough]];
    case CaseId::Case1: mask[tier_index(Tier::Ground)] = true; break;
    case CaseId::Custom:
        for (Tier t : custom_tiers)
            mask[tier_index(t)] = true;
        break;
    }
    return mask;
}

TierMask enabled_tiers(const ScenarioConfig& config)
{
    return enabled_tiers(config.case_id, config.custom_tiers);
}

const ServerSpec* find_server(const ScenarioConfig& config, Tier tier) noexcept
{
    auto it = std::find_if(config.servers.begin(), config.servers.end(),
                           [tier](const ServerSpec& s) { return s.tier == tier; });
    return it == config.servers.end() ? nullptr : &*it;
}

ScenarioConfig default_scenario()
{
    ScenarioConfig c;
    c.user_count = 30;

    const Position3D ground_pos{200.0, 200.0, 0.0};
    const Position3D air_pos{100.0, 100.0, 300.0};
    const Position3D space_pos{100.0, 100.0, 160000.0};
    c.servers = {
        {Tier::Ground, ground_pos, 1.5e9, 1, 1, default_max_concurrent(Tier::Ground, 1)},
        {Tier::Air, air_pos, 1.0e9, 1, 1, default_max_concurrent(Tier::Air, 1)},
        {Tier::Space, space_pos, 0.5e9, 1, 1, default_max_concurrent(Tier::Space, 1)},
        {Tier::SpaceCluster, space_pos, 0.5e9, 1, 3, default_max_concurrent(Tier::SpaceCluster, 3)},
    };

    // Ground surfaces sit on facades inside the user area; air surfaces on rooftops.
    c.rises = {
        {0, {-50.0, -50.0, 10.0}, 256, Tier::Ground},
        {1, {-50.0, 50.0, 10.0}, 256, Tier::Ground},
        {2, {50.0, -50.0, 10.0}, 256, Tier::Ground},
        {3, {-70.0, -70.0, 25.0}, 256, Tier::Air},
        {4, {-70.0, 30.0, 25.0}, 256, Tier::Air},
        {5, {30.0, -70.0, 25.0}, 256, Tier::Air},
    };

    c.radio = RadioParams{};
    c.task = TaskProfile{2e5, 1e9, 0.0};
    c.delta_s = 60.0;
    c.case_id = CaseId::Case3;
    c.ris_enabled = true;
    c.max_cycles = 100;
    c.seed = 1;
    c.user_area_m = 200.0;
    return c;
}

namespace {

class Checker
{
public:
    void require(bool ok, std::string_view code, std::string field, std::string message)
    {
        if (!ok)
            out_.push_back({std::string(code), std::move(field), std::move(message)});
    }

    void position(const Position3D& p, const std::string& field)
    {
        const bool finite = std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
        require(finite, "POSITION_NOT_FINITE", field, "coordinates must be finite");
        require(!(p.z < 0.0), "POSITION_BELOW_GROUND", field + ".z", "z must be >= 0");
    }

    void task(const TaskProfile& t, const std::string& field)
    {
        require(t.input_bits > 0.0, "TASK_INPUT_NONPOSITIVE", field + ".input_bits",
                "input_bits must be > 0");
        require(t.cycles > 0.0, "TASK_CYCLES_NONPOSITIVE", field + ".cycles", "cycles must be > 0");
        require(t.result_bits >= 0.0, "TASK_RESULT_NEGATIVE", field + ".result_bits",
                "result_bits must be >= 0");
    }

    std::vector<Violation> take() { return std::move(out_); }

private:
    std::vector<Violation> out_;
};

} // namespace

std::vector<Violation> validate(const ScenarioConfig& config)
{
    Checker ck;

    for (std::size_t i = 0; i < config.users.size(); ++i) {
        const auto field = fmt::format("users[{}]", i);
        ck.position(config.users[i].position, field + ".position");
        if (config.users[i].task)
            ck.task(*config.users[i].task, field + ".task");
    }
    ck.require(config.users.empty() || config.users.size() == config.user_count,
               "USER_COUNT_MISMATCH", "user_count",
               "user_count must equal the number of explicit users");

    for (std::size_t i = 0; i < config.servers.size(); ++i) {
        const auto& s = config.servers[i];
        const auto field = fmt::format("servers[{}]", i);
        ck.position(s.position, field + ".position");
        ck.require(s.capacity_cps > 0.0 && std::isfinite(s.capacity_cps),
                   "SERVER_CAPACITY_NONPOSITIVE", field + ".capacity_cps", "capacity_cps must be > 0");
        ck.require(s.count >= 1, "SERVER_COUNT_NONPOSITIVE", field + ".count", "count must be >= 1");
        ck.require(s.cluster_size >= 1, "SERVER_CLUSTER_SIZE_NONPOSITIVE", field + ".cluster_size",
                   "cluster_size must be >= 1");
        ck.require(s.max_concurrent >= 1, "SERVER_MAX_CONCURRENT_NONPOSITIVE",
                   field + ".max_concurrent", "max_concurrent must be >= 1");
    }

    for (std::size_t i = 0; i < config.rises.size(); ++i) {
        const auto& r = config.rises[i];
        const auto field = fmt::format("rises[{}]", i);
        ck.position(r.position, field + ".position");
        ck.require(r.n_elements >= 1, "RIS_ELEMENTS_NONPOSITIVE", field + ".n_elements",
                   "n_elements must be >= 1");
        ck.require(!is_space_tier(r.segment), "RIS_ON_SPACE_TIER", field + ".segment",
                   "RIS segment must be ground or air");
        for (std::size_t j = 0; j < i; ++j)
            ck.require(config.rises[j].id != r.id, "RIS_ID_DUPLICATE", field + ".id",
                       fmt::format("RIS id {} is used more than once", r.id));
    }

    const auto& radio = config.radio;
    ck.require(radio.bandwidth_hz > 0.0 && std::isfinite(radio.bandwidth_hz),
               "RADIO_BANDWIDTH_NONPOSITIVE", "radio.bandwidth_hz", "bandwidth_hz must be > 0");
    ck.require(std::isfinite(radio.tx_power_dbm), "RADIO_VALUE_NOT_FINITE", "radio.tx_power_dbm",
               "tx_power_dbm must be finite");
    ck.require(std::isfinite(radio.noise_dbm), "RADIO_VALUE_NOT_FINITE", "radio.noise_dbm",
               "noise_dbm must be finite");
    ck.require(radio.carrier_hz > 0.0, "RADIO_CARRIER_NONPOSITIVE", "radio.carrier_hz",
               "carrier_hz must be > 0");
    for (auto [value, name] : {std::pair{radio.nlos_exponent, "nlos_exponent"},
                               std::pair{radio.los_exponent, "los_exponent"},
                               std::pair{radio.ris_segment_exponent, "ris_segment_exponent"}})
        ck.require(value >= 2.0 && std::isfinite(value), "RADIO_EXPONENT_BELOW_TWO",
                   fmt::format("radio.{}", name), "path-loss exponents must be >= 2");
    ck.require(radio.reference_loss_db > 0.0 && std::isfinite(radio.reference_loss_db),
               "RADIO_REFERENCE_LOSS_NONPOSITIVE", "radio.reference_loss_db",
               "reference_loss_db must be > 0");

    ck.task(config.task, "task");

    ck.require(config.delta_s > 0.0, "DELTA_NONPOSITIVE", "delta_s", "delta_s must be > 0");
    ck.require(config.max_cycles >= 1, "MAX_CYCLES_NONPOSITIVE", "max_cycles",
               "max_cycles must be >= 1");
    ck.require(config.user_area_m > 0.0 && std::isfinite(config.user_area_m),
               "USER_AREA_NONPOSITIVE", "user_area_m", "user_area_m must be > 0");
    ck.require(config.case_id != CaseId::Custom || !config.custom_tiers.empty(),
               "CUSTOM_TIERS_EMPTY", "custom_tiers", "custom case needs at least one tier");

    const TierMask mask = enabled_tiers(config);
    for (Tier t : kTierOrder) {
        if (!mask[tier_index(t)])
            continue;
        const auto n = std::count_if(config.servers.begin(), config.servers.end(),
                                     [t](const ServerSpec& s) { return s.tier == t; });
        ck.require(n != 0, "CASE_TIER_MISSING", "servers",
                   fmt::format("case references missing tier {}", tier_label(t)));
        ck.require(n <= 1, "CASE_TIER_DUPLICATE", "servers",
                   fmt::format("case references tier {} with {} servers", tier_label(t), n));
    }

    return ck.take();
}

void require_valid(const ScenarioConfig& config)
{
    auto violations = validate(config);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
}

} // namespace rismec
