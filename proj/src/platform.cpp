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

#include "rismec/platform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace rismec {

namespace {

// Residual left by subtracting nearly equal ~1e9-cycle quantities.
constexpr double kDoneRelTolerance = 1e-12;

bool done(double remaining, double cycles) noexcept { return remaining <= cycles * kDoneRelTolerance; }

} // namespace

Platform::Platform(Tier tier, double total_capacity_cps, int max_concurrent)
    : tier_(tier), capacity_(total_capacity_cps), max_concurrent_(max_concurrent)
{
    if (!(total_capacity_cps > 0.0) || max_concurrent < 1)
        throw ContractViolation(fmt::format("platform {} needs capacity > 0 and max_concurrent >= 1",
                                            tier_name(tier)));
}

Platform Platform::from_spec(const ServerSpec& spec)
{
    return Platform(spec.tier, platform_capacity_cps(spec), spec.max_concurrent);
}

double Platform::share_cps() const noexcept
{
    return tasks_.empty() ? 0.0 : capacity_ / static_cast<double>(tasks_.size());
}

double Platform::remaining_cycles(UserId task) const
{
    auto it = std::find_if(tasks_.begin(), tasks_.end(), [task](const Task& t) { return t.id == task; });
    if (it == tasks_.end())
        throw ContractViolation(fmt::format("task {} is not admitted", to_index(task)));
    return it->remaining;
}

double Platform::remaining_work() const noexcept
{
    return std::accumulate(tasks_.begin(), tasks_.end(), 0.0,
                           [](double acc, const Task& t) { return acc + t.remaining; });
}

bool Platform::availability_flag() const noexcept
{
    return tasks_.size() < static_cast<std::size_t>(max_concurrent_);
}

double Platform::estimate_delay(const TaskProfile& task, const LinkBudget& lb) const noexcept
{
    if (!(lb.rate_bps > 0.0))
        return std::numeric_limits<double>::infinity();
    const double projected_share = capacity_ / static_cast<double>(tasks_.size() + 1);
    return (task.input_bits + task.result_bits) / lb.rate_bps + 2.0 * lb.prop_delay_s +
           task.cycles / projected_share;
}

AdmissionResult Platform::admit(UserId task, const TaskProfile& profile)
{
    if (std::any_of(tasks_.begin(), tasks_.end(), [task](const Task& t) { return t.id == task; }))
        throw ContractViolation(fmt::format("task {} admitted twice to {}", to_index(task), tier_name(tier_)));
    if (!availability_flag())
        return {};
    tasks_.push_back({task, profile.cycles, profile.cycles});
    return {true, share_cps()};
}

std::vector<UserId> Platform::advance(double dt)
{
    if (dt < 0.0)
        throw ContractViolation("advance: dt must be >= 0");
    std::vector<UserId> finished;
    if (tasks_.empty() || dt == 0.0)
        return finished;

    const double step = share_cps() * dt;
    for (auto& t : tasks_)
        t.remaining -= step;

    auto keep = std::stable_partition(tasks_.begin(), tasks_.end(),
                                      [](const Task& t) { return !done(t.remaining, t.cycles); });
    for (auto it = keep; it != tasks_.end(); ++it)
        finished.push_back(it->id);
    tasks_.erase(keep, tasks_.end());
    return finished;
}

std::vector<Completion> Platform::completion_times() const
{
    // Sorted by remaining work, the k-th task finishes once every task still
    // running has received (r_k - r_{k-1}) more cycles.
    std::vector<std::size_t> order(tasks_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [this](std::size_t a, std::size_t b) { return tasks_[a].remaining < tasks_[b].remaining; });

    std::vector<Completion> out;
    out.reserve(tasks_.size());
    double now = 0.0;
    double served = 0.0;  // cycles received so far by each unfinished task
    std::size_t running = tasks_.size();
    for (std::size_t idx : order) {
        const double r = std::max(tasks_[idx].remaining, 0.0);
        now += (r - served) * static_cast<double>(running) / capacity_;
        served = r;
        out.push_back({tasks_[idx].id, now});
        --running;
    }
    return out;
}

double Platform::makespan() const
{
    const auto times = completion_times();
    return times.empty() ? 0.0 : times.back().time_s;
}

std::vector<Completion> Platform::drain()
{
    std::vector<Completion> out;
    double now = 0.0;
    while (!tasks_.empty()) {
        const auto smallest = std::min_element(tasks_.begin(), tasks_.end(), [](const Task& a, const Task& b) {
            return a.remaining < b.remaining;
        });
        const UserId next = smallest->id;
        const double dt = std::max(smallest->remaining, 0.0) / share_cps();
        now += dt;
        auto finished = advance(dt);
        if (finished.empty()) {
            // Rounding kept the smallest task alive; it is done by construction.
            std::erase_if(tasks_, [next](const Task& t) { return t.id == next; });
            finished.push_back(next);
        }
        for (UserId id : finished)
            out.push_back({id, now});
    }
    return out;
}

} // namespace rismec
