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

#include "rismec/offload.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include <fmt/format.h>

namespace rismec {

SelectionDecision select_platform(const TierFlags& flags, const TierDelays& delays, double delta_s) noexcept
{
    for (Tier t : kTierOrder) {
        const auto i = tier_index(t);
        if (flags[i] && delays[i] <= delta_s)
            return {t, delays[i]};
    }
    return {};
}

double allocate_bandwidth(int n_users_on_tier, const RadioParams& radio)
{
    if (n_users_on_tier < 1)
        throw ContractViolation("allocate_bandwidth: need at least one user");
    return radio.bandwidth_hz / n_users_on_tier;
}

void RisAssignment::assign(UserId user, int ris_id)
{
    for (const auto& [u, r] : by_user_)
        if (r == ris_id)
            throw ContractViolation(fmt::format("RIS {} already serves user {}", ris_id, to_index(u)));
    if (!by_user_.emplace(user, ris_id).second)
        throw ContractViolation(fmt::format("user {} already has a RIS", to_index(user)));
}

std::optional<int> RisAssignment::ris_for(UserId user) const
{
    auto it = by_user_.find(user);
    if (it == by_user_.end())
        return std::nullopt;
    return it->second;
}

RisAssignment assign_ris(std::span<const RisCandidate> candidates, std::span<const RisSpec> rises)
{
    std::vector<const RisCandidate*> order;
    order.reserve(candidates.size());
    for (const auto& c : candidates)
        order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const RisCandidate* a, const RisCandidate* b) {
        if (a->direct_snr_lin != b->direct_snr_lin)
            return a->direct_snr_lin < b->direct_snr_lin;
        return a->user < b->user;
    });

    std::vector<bool> taken(rises.size(), false);
    RisAssignment out;
    for (const RisCandidate* c : order) {
        std::optional<std::size_t> best;
        double best_d = 0.0;
        for (std::size_t i = 0; i < rises.size(); ++i) {
            if (taken[i])
                continue;
            const double d = distance(c->position, rises[i].position);
            if (!best || d < best_d || (d == best_d && rises[i].id < rises[*best].id)) {
                best = i;
                best_d = d;
            }
        }
        if (!best)
            break;
        taken[*best] = true;
        out.assign(c->user, rises[*best].id);
    }
    return out;
}

World::World(ScenarioConfig config, std::vector<PendingUser> users)
    : config_(std::move(config)), pending_(std::move(users))
{
    const TierMask mask = enabled_tiers(config_);
    for (Tier t : kTierOrder) {
        if (!mask[tier_index(t)])
            continue;
        const ServerSpec* spec = find_server(config_, t);
        if (!spec)
            throw ContractViolation(fmt::format("no server for enabled tier {}", tier_name(t)));
        servers_[tier_index(t)] = spec;
        platforms_[tier_index(t)].emplace(Platform::from_spec(*spec));
    }
    std::sort(pending_.begin(), pending_.end(),
              [](const PendingUser& a, const PendingUser& b) { return a.id < b.id; });
}

const Platform& World::platform(Tier t) const
{
    const auto& p = platforms_[tier_index(t)];
    if (!p)
        throw ContractViolation(fmt::format("tier {} is not enabled", tier_name(t)));
    return *p;
}

CycleReport run_offloading_cycle(World& world, int cycle_index)
{
    if (world.pending_.empty())
        throw ContractViolation("run_offloading_cycle: no pending users");

    const ScenarioConfig& cfg = world.config_;
    const RadioParams& radio = cfg.radio;
    CycleReport report;
    report.cycle = cycle_index;

    // Step 1: each user, in id order, picks a tier against live platform state.
    std::array<std::vector<std::size_t>, kTierCount> on_tier;  // indices into pending_
    std::vector<bool> selected(world.pending_.size(), false);
    for (std::size_t i = 0; i < world.pending_.size(); ++i) {
        const PendingUser& u = world.pending_[i];
        TierFlags flags{};
        TierDelays delays;
        delays.fill(std::numeric_limits<double>::infinity());
        for (Tier t : kTierOrder) {
            const auto ti = tier_index(t);
            auto& platform = world.platforms_[ti];
            if (!platform)
                continue;
            flags[ti] = platform->availability_flag();
            const double bw = allocate_bandwidth(static_cast<int>(on_tier[ti].size()) + 1, radio);
            const LinkBudget lb = link_budget(u.position, *world.servers_[ti], std::nullopt, bw, radio);
            delays[ti] = platform->estimate_delay(u.task, lb);
        }
        const SelectionDecision decision = select_platform(flags, delays, cfg.delta_s);
        if (!decision.served())
            continue;
        const auto ti = tier_index(*decision.tier);
        [[maybe_unused]] const AdmissionResult admitted = world.platforms_[ti]->admit(u.id, u.task);
        assert(admitted.accepted);
        on_tier[ti].push_back(i);
        selected[i] = true;
    }

    // Steps 2-4: bandwidth split, RIS assignment and the actual uplink.
    for (Tier t : kTierOrder) {
        const auto ti = tier_index(t);
        const auto& members = on_tier[ti];
        if (members.empty())
            continue;
        const ServerSpec& server = *world.servers_[ti];
        const double bw = allocate_bandwidth(static_cast<int>(members.size()), radio);

        RisAssignment ris_map;
        std::vector<RisSpec> segment_rises;
        if (cfg.ris_enabled && !is_space_tier(t)) {
            std::copy_if(cfg.rises.begin(), cfg.rises.end(), std::back_inserter(segment_rises),
                         [t](const RisSpec& r) { return r.segment == t; });
            std::vector<RisCandidate> candidates;
            for (std::size_t i : members) {
                const PendingUser& u = world.pending_[i];
                const LinkBudget direct = link_budget(u.position, server, std::nullopt, bw, radio);
                candidates.push_back({u.id, u.position, direct.snr_lin});
            }
            ris_map = assign_ris(candidates, segment_rises);
        }

        for (std::size_t i : members) {
            const PendingUser& u = world.pending_[i];
            std::optional<RisSpec> ris;
            if (auto id = ris_map.ris_for(u.id)) {
                auto it = std::find_if(segment_rises.begin(), segment_rises.end(),
                                       [&](const RisSpec& r) { return r.id == *id; });
                ris = *it;
            }
            const LinkBudget lb = link_budget(u.position, server, ris, bw, radio);
            OffloadRecord rec;
            rec.user = u.id;
            rec.cycle = cycle_index;
            rec.tier = t;
            rec.wait_s = u.wait_s;
            rec.comm_delay_s = (u.task.input_bits + u.task.result_bits) / lb.rate_bps + 2.0 * lb.prop_delay_s;
            rec.rate_bps = lb.rate_bps;
            rec.bandwidth_hz = bw;
            rec.ris_id = lb.ris_id;
            report.served.push_back(rec);
        }
    }

    // Step 5: processing. Every platform runs its batch to completion.
    for (Tier t : kTierOrder) {
        auto& platform = world.platforms_[tier_index(t)];
        if (!platform || platform->empty())
            continue;
        for (const Completion& c : platform->completion_times()) {
            auto rec = std::find_if(report.served.begin(), report.served.end(),
                                    [&](const OffloadRecord& r) { return r.user == c.task; });
            rec->comp_delay_s = c.time_s;
        }
        platform->drain();
    }

    std::sort(report.served.begin(), report.served.end(),
              [](const OffloadRecord& a, const OffloadRecord& b) { return a.user < b.user; });
    for (const auto& rec : report.served)
        report.duration_s = std::max(report.duration_s, rec.comm_delay_s + rec.comp_delay_s);

    std::vector<PendingUser> still_pending;
    for (std::size_t i = 0; i < world.pending_.size(); ++i) {
        if (selected[i])
            continue;
        PendingUser u = world.pending_[i];
        u.wait_s += report.duration_s;
        report.unserved.push_back(u.id);
        still_pending.push_back(u);
    }
    world.pending_ = std::move(still_pending);
    return report;
}

} // namespace rismec
