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

#ifndef RISMEC_OFFLOAD_HPP
#define RISMEC_OFFLOAD_HPP

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rismec/channel.hpp"
#include "rismec/platform.hpp"
#include "rismec/scenario.hpp"

namespace rismec {

using TierFlags = std::array<bool, kTierCount>;
using TierDelays = std::array<double, kTierCount>;

struct SelectionDecision
{
    std::optional<Tier> tier;  // empty: unserved this cycle
    double estimated_delay_s = std::numeric_limits<double>::infinity();

    bool served() const noexcept { return tier.has_value(); }
};

// First tier in Ground, Air, Space, SpaceCluster order whose flag is set
// and whose delay is within delta. Delay magnitude never reorders tiers.
SelectionDecision select_platform(const TierFlags& flags, const TierDelays& delays, double delta_s) noexcept;

// Equal orthogonal split of the tier band. n_users_on_tier >= 1.
double allocate_bandwidth(int n_users_on_tier, const RadioParams& radio);

struct RisCandidate
{
    UserId user;
    Position3D position;
    double direct_snr_lin = 0.0;
};

// One-to-one user -> RIS id mapping for a cycle.
class RisAssignment
{
public:
    void assign(UserId user, int ris_id);
    std::optional<int> ris_for(UserId user) const;
    std::size_t size() const noexcept { return by_user_.size(); }
    bool empty() const noexcept { return by_user_.empty(); }
    const std::map<UserId, int>& entries() const noexcept { return by_user_; }

private:
    std::map<UserId, int> by_user_;
};

// Weakest direct SNR first (ties: lower user id), each user takes the
// nearest RIS still free (ties: lower RIS id). All `rises` are assumed to
// belong to the candidates' segment.
RisAssignment assign_ris(std::span<const RisCandidate> candidates, std::span<const RisSpec> rises);

struct PendingUser
{
    UserId id;
    Position3D position;
    TaskProfile task;
    double wait_s = 0.0;
};

struct OffloadRecord
{
    UserId user;
    int cycle = 0;
    Tier tier = Tier::Ground;
    double wait_s = 0.0;
    double comm_delay_s = 0.0;  // uplink (+ result) transmission + round-trip propagation
    double comp_delay_s = 0.0;
    double rate_bps = 0.0;
    double bandwidth_hz = 0.0;
    std::optional<int> ris_id;
};

struct CycleReport
{
    int cycle = 0;
    std::vector<OffloadRecord> served;
    std::vector<UserId> unserved;  // still pending, ascending id
    double duration_s = 0.0;
};

// Mutable state of one simulation: platforms of the enabled tiers and
// the users still waiting to offload.
class World
{
public:
    World(ScenarioConfig config, std::vector<PendingUser> users);

    const ScenarioConfig& config() const noexcept { return config_; }
    const std::vector<PendingUser>& pending() const noexcept { return pending_; }
    bool has_platform(Tier t) const noexcept { return platforms_[tier_index(t)].has_value(); }
    const Platform& platform(Tier t) const;

    friend CycleReport run_offloading_cycle(World& world, int cycle_index);

private:
    ScenarioConfig config_;
    std::array<const ServerSpec*, kTierCount> servers_{};
    std::array<std::optional<Platform>, kTierCount> platforms_;
    std::vector<PendingUser> pending_;
};

// One request/selection/allocation/transmission/processing round.
// Throws ContractViolation when nobody is pending.
CycleReport run_offloading_cycle(World& world, int cycle_index);

} // namespace rismec

#endif
