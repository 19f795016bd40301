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

#ifndef RISMEC_SIMULATION_HPP
#define RISMEC_SIMULATION_HPP

#include <cstdint>
#include <vector>

#include "rismec/offload.hpp"
#include "rismec/scenario.hpp"

namespace rismec {

// Totals over all users of one run.
//
// total_comm_delay_s counts waiting plus transmission; users never served
// contribute their accumulated waiting there and nothing to the rate.
// total_delay_s is always total_computing_delay_s + total_comm_delay_s.
struct Metrics
{
    double total_delay_s = 0.0;
    double total_computing_delay_s = 0.0;
    double total_comm_delay_s = 0.0;
    double total_rate_bps = 0.0;
    std::size_t served_count = 0;
    std::size_t never_served_count = 0;
    int cycles_used = 0;

    bool operator==(const Metrics&) const = default;
};

struct SimulationResult
{
    Metrics metrics;
    std::vector<OffloadRecord> records;    // ascending user id
    std::vector<PendingUser> never_served;  // ascending user id
    std::vector<CycleReport> cycles;
};

// n users uniformly in the square of side area_m centered on the origin,
// z = 0. The first k positions do not depend on n.
std::vector<Position3D> place_users(std::size_t n, double area_m, std::uint64_t seed);

std::vector<PendingUser> population(const ScenarioConfig& config);

SimulationResult simulate(const ScenarioConfig& config);

Metrics run_simulation(const ScenarioConfig& config);

} // namespace rismec

#endif
