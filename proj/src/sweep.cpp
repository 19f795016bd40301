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

#include "rismec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include <fmt/format.h>

namespace rismec {

std::string_view axis_name(SweepAxis a) noexcept
{
    switch (a) {
    case SweepAxis::None: return "none";
    case SweepAxis::Users: return "users";
    case SweepAxis::GroundServers: return "servers";
    case SweepAxis::RisCount: return "ris";
    }
    return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view name) noexcept
{
    for (auto a : {SweepAxis::None, SweepAxis::Users, SweepAxis::GroundServers, SweepAxis::RisCount})
        if (axis_name(a) == name)
            return a;
    return std::nullopt;
}

std::vector<std::uint64_t> replication_seeds(std::uint64_t base, int replications)
{
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < replications; ++i)
        seeds.push_back(base + static_cast<std::uint64_t>(i));
    return seeds;
}

std::vector<Violation> validate_sweep(const SweepSpec& sweep)
{
    std::vector<Violation> out;
    auto require = [&out](bool ok, const char* code, const char* field, std::string msg) {
        if (!ok)
            out.push_back({code, field, std::move(msg)});
    };
    require(!sweep.values.empty(), "SWEEP_VALUES_EMPTY", "values", "sweep needs at least one value");
    require(std::adjacent_find(sweep.values.begin(), sweep.values.end(), std::greater_equal<>{}) ==
                sweep.values.end(),
            "SWEEP_VALUES_NOT_ASCENDING", "values", "sweep values must be strictly ascending");
    require(sweep.axis != SweepAxis::None || sweep.values.size() <= 1, "SWEEP_NONE_MULTIPLE", "values",
            "axis none takes a single value");
    const int lowest = sweep.values.empty() ? 0 : sweep.values.front();
    require(sweep.axis != SweepAxis::GroundServers || lowest >= 1, "SWEEP_VALUE_OUT_OF_RANGE", "values",
            "ground server count must be >= 1");
    require(lowest >= 0, "SWEEP_VALUE_OUT_OF_RANGE", "values", "sweep values must be >= 0");
    require(!sweep.cases.empty(), "SWEEP_CASES_EMPTY", "cases", "sweep needs at least one case");
    require(!sweep.seeds.empty(), "SWEEP_SEEDS_EMPTY", "seeds", "sweep needs at least one seed");
    return out;
}

ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, int value)
{
    ScenarioConfig c = base;
    switch (axis) {
    case SweepAxis::None: break;
    case SweepAxis::Users: {
        const auto n = static_cast<std::size_t>(value);
        if (!c.users.empty()) {
            if (n > c.users.size())
                throw ContractViolation(
                    fmt::format("users axis value {} exceeds the {} explicit users", n, c.users.size()));
            c.users.resize(n);
        }
        c.user_count = n;
        break;
    }
    case SweepAxis::GroundServers: {
        auto it = std::find_if(c.servers.begin(), c.servers.end(),
                               [](const ServerSpec& s) { return s.tier == Tier::Ground; });
        if (it == c.servers.end())
            throw ContractViolation("servers axis needs a ground server");
        it->count = value;
        break;
    }
    case SweepAxis::RisCount: {
        int want_ground = (value + 1) / 2;
        int want_air = value / 2;
        std::vector<RisSpec> kept;
        for (const auto& r : c.rises) {
            if (r.segment == Tier::Ground && want_ground > 0) {
                kept.push_back(r);
                --want_ground;
            } else if (r.segment == Tier::Air && want_air > 0) {
                kept.push_back(r);
                --want_air;
            }
        }
        if (want_ground > 0 || want_air > 0)
            throw ContractViolation(fmt::format("ris axis value {} needs {} ground and {} air RISs", value,
                                                (value + 1) / 2, value / 2));
        c.rises = std::move(kept);
        break;
    }
    }
    return c;
}

std::vector<ResultRow> run_sweep(const ScenarioConfig& base, const SweepSpec& sweep, unsigned threads)
{
    if (auto problems = validate_sweep(sweep); !problems.empty())
        throw ValidationError(std::move(problems));

    std::vector<bool> ris_settings;
    if (sweep.ris != RisSetting::On)
        ris_settings.push_back(false);
    if (sweep.ris != RisSetting::Off)
        ris_settings.push_back(true);

    struct Cell
    {
        ScenarioConfig config;
        ResultRow row;
    };
    std::vector<Cell> cells;
    for (CaseId case_id : sweep.cases)
        for (bool ris : ris_settings)
            for (int value : sweep.values)
                for (std::uint64_t seed : sweep.seeds) {
                    ScenarioConfig c = apply_axis(base, sweep.axis, value);
                    c.case_id = case_id;
                    c.ris_enabled = ris;
                    c.seed = seed;
                    require_valid(c);
                    cells.push_back({std::move(c), {case_id, ris, sweep.axis, value, seed, {}}});
                }

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));

    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                cells[i].row.metrics = run_simulation(cells[i].config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }

    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<ResultRow> rows;
    rows.reserve(cells.size());
    for (auto& cell : cells)
        rows.push_back(cell.row);
    return rows;
}

std::string_view csv_header() noexcept
{
    return "case,ris_enabled,axis,axis_value,seed,total_delay_s,total_computing_delay_s,"
           "total_comm_delay_s,total_rate_bps,served,never_served,cycles_used";
}

namespace {

std::string_view case_column(CaseId c) noexcept
{
    switch (c) {
    case CaseId::Case1: return "1";
    case CaseId::Case2: return "2";
    case CaseId::Case3: return "3";
    case CaseId::Custom: return "custom";
    }
    return "?";
}

} // namespace

std::size_t write_results(std::span<const ResultRow> rows, std::ostream& out)
{
    if (rows.empty())
        throw ResultsError("EMPTY_RESULTS", "no result rows to write");

    std::string text(csv_header());
    text += '\n';
    for (const auto& r : rows) {
        const auto& m = r.metrics;
        text += fmt::format("{},{},{},{},{},{:.6g},{:.6g},{:.6g},{:.6g},{},{},{}\n", case_column(r.case_id),
                            r.ris_enabled ? 1 : 0, axis_name(r.axis), r.axis_value, r.seed, m.total_delay_s,
                            m.total_computing_delay_s, m.total_comm_delay_s, m.total_rate_bps, m.served_count,
                            m.never_served_count, m.cycles_used);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw ResultsError("WRITE_FAILED", "result stream went bad while writing");
    return text.size();
}

std::size_t write_results(std::span<const ResultRow> rows, const std::filesystem::path& path)
{
    if (rows.empty())
        throw ResultsError("EMPTY_RESULTS", "no result rows to write");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ResultsError("DESTINATION_UNWRITABLE", fmt::format("cannot open '{}' for writing", path.string()));
    return write_results(rows, out);
}

} // namespace rismec
