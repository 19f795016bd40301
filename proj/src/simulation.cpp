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

#include "rismec/simulation.hpp"

#include <algorithm>
#include <random>

namespace rismec {

namespace {

// mt19937_64 output is fixed by the standard; the distribution classes are
// not, so the unit-interval mapping is done by hand.
double unit_interval(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

} // namespace

std::vector<Position3D> place_users(std::size_t n, double area_m, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::vector<Position3D> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = (unit_interval(gen) - 0.5) * area_m;
        const double y = (unit_interval(gen) - 0.5) * area_m;
        out.push_back({x, y, 0.0});
    }
    return out;
}

std::vector<PendingUser> population(const ScenarioConfig& config)
{
    std::vector<PendingUser> users;
    if (!config.users.empty()) {
        for (std::size_t i = 0; i < config.users.size(); ++i) {
            const auto& u = config.users[i];
            users.push_back({UserId{static_cast<std::uint32_t>(i)}, u.position, u.task.value_or(config.task)});
        }
        return users;
    }
    const auto positions = place_users(config.user_count, config.user_area_m, config.seed);
    for (std::size_t i = 0; i < positions.size(); ++i)
        users.push_back({UserId{static_cast<std::uint32_t>(i)}, positions[i], config.task});
    return users;
}

SimulationResult simulate(const ScenarioConfig& config)
{
    require_valid(config);

    SimulationResult result;
    World world(config, population(config));
    for (int cycle = 0; cycle < config.max_cycles && !world.pending().empty(); ++cycle) {
        CycleReport report = run_offloading_cycle(world, cycle);
        result.metrics.cycles_used = cycle + 1;
        const bool stalled = report.served.empty();
        result.records.insert(result.records.end(), report.served.begin(), report.served.end());
        result.cycles.push_back(std::move(report));
        // Platforms are empty at the start of every cycle, so a cycle that
        // serves nobody will repeat forever.
        if (stalled)
            break;
    }
    result.never_served = world.pending();

    std::sort(result.records.begin(), result.records.end(),
              [](const OffloadRecord& a, const OffloadRecord& b) { return a.user < b.user; });

    Metrics& m = result.metrics;
    for (const auto& r : result.records) {
        m.total_computing_delay_s += r.comp_delay_s;
        m.total_comm_delay_s += r.wait_s + r.comm_delay_s;
        m.total_rate_bps += r.rate_bps;
    }
    for (const auto& u : result.never_served)
        m.total_comm_delay_s += u.wait_s;
    m.total_delay_s = m.total_computing_delay_s + m.total_comm_delay_s;
    m.served_count = result.records.size();
    m.never_served_count = result.never_served.size();
    return result;
}

Metrics run_simulation(const ScenarioConfig& config) { return simulate(config).metrics; }

} // namespace rismec
