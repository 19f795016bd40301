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

#ifndef RISMEC_PLATFORM_HPP
#define RISMEC_PLATFORM_HPP

#include <cstdint>
#include <vector>

#include "rismec/channel.hpp"
#include "rismec/scenario.hpp"

namespace rismec {

enum class UserId : std::uint32_t {};

constexpr std::uint32_t to_index(UserId id) noexcept { return static_cast<std::uint32_t>(id); }

struct AdmissionResult
{
    bool accepted = false;
    double share_cps = 0.0;  // 0 when rejected
};

struct Completion
{
    UserId task;
    double time_s;  // from the moment of the query
};

// One tier's compute. Admitted tasks split the capacity equally; at most
// max_concurrent of them at a time.
class Platform
{
public:
    Platform(Tier tier, double total_capacity_cps, int max_concurrent);

    static Platform from_spec(const ServerSpec& spec);

    Tier tier() const noexcept { return tier_; }
    double total_capacity_cps() const noexcept { return capacity_; }
    int max_concurrent() const noexcept { return max_concurrent_; }
    std::size_t admitted_count() const noexcept { return tasks_.size(); }
    bool empty() const noexcept { return tasks_.empty(); }

    double share_cps() const noexcept;

    // Remaining cycles of an admitted task; throws ContractViolation if unknown.
    double remaining_cycles(UserId task) const;

    double remaining_work() const noexcept;

    // free slot?
    bool availability_flag() const noexcept;

    // Request-time delay: (input + result bits) / rate + 2 * propagation
    // + cycles / (capacity / (admitted + 1)). Infinite for a dead link.
    double estimate_delay(const TaskProfile& task, const LinkBudget& lb) const noexcept;

    // Throws ContractViolation on a duplicate id.
    AdmissionResult admit(UserId task, const TaskProfile& profile);

    // Runs every task at its current share for dt seconds, then removes
    // and returns the tasks that are done (ascending admission order).
    std::vector<UserId> advance(double dt);

    // Exact completion instants of every admitted task under processor
    // sharing, shares recomputed at each completion. Sorted by time, ties
    // in admission order.
    std::vector<Completion> completion_times() const;

    double makespan() const;

    std::vector<Completion> drain();

private:
    struct Task
    {
        UserId id;
        double remaining;
        double cycles;
    };

    Tier tier_;
    double capacity_;
    int max_concurrent_;
    std::vector<Task> tasks_;  // admission order
};

} // namespace rismec

#endif
