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

#include "rismec/cli.hpp"

#include <charconv>
#include <iostream>
#include <optional>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rismec/scenario_io.hpp"
#include "rismec/sweep.hpp"

namespace rismec {

namespace {

constexpr const char* kExitCodeHelp = R"(Exit codes:
  0  success
  1  simulation failed unexpectedly
  2  bad command-line argument
  3  scenario file missing or unreadable
  4  scenario file malformed or invalid
  5  output destination unwritable)";

class BadArgument : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw BadArgument(fmt::format("--sweep: '{}' is not a valid {}", s, what));
    return v;
}

// axis:start:stop:step
std::pair<SweepAxis, std::vector<int>> parse_sweep(const std::string& text)
{
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    for (auto pos = rest.find(':'); pos != std::string_view::npos; pos = rest.find(':')) {
        parts.push_back(rest.substr(0, pos));
        rest.remove_prefix(pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 4)
        throw BadArgument(fmt::format("--sweep expects axis:start:stop:step, got '{}'", text));

    const auto axis = parse_axis(parts[0]);
    if (!axis || *axis == SweepAxis::None)
        throw BadArgument(fmt::format("--sweep: unknown axis '{}' (users, servers, ris)", parts[0]));
    const int start = parse_int(parts[1], "start");
    const int stop = parse_int(parts[2], "stop");
    const int step = parse_int(parts[3], "step");
    if (step <= 0 || start > stop || start < 0)
        throw BadArgument(fmt::format("--sweep: need 0 <= start <= stop and step > 0, got '{}'", text));

    std::vector<int> values;
    for (long v = start; v <= stop; v += step)
        values.push_back(static_cast<int>(v));
    return {*axis, values};
}

CaseId case_from_number(int n)
{
    switch (n) {
    case 1: return CaseId::Case1;
    case 2: return CaseId::Case2;
    default: return CaseId::Case3;
    }
}

void print_summary(std::ostream& out, const ResultRow& row)
{
    const auto& m = row.metrics;
    fmt::print(out, "case {} | ris {} | seed {}\n", case_name(row.case_id), row.ris_enabled ? "on" : "off", row.seed);
    fmt::print(out, "  total_delay_s           {:.6g}\n", m.total_delay_s);
    fmt::print(out, "  total_computing_delay_s {:.6g}\n", m.total_computing_delay_s);
    fmt::print(out, "  total_comm_delay_s      {:.6g}\n", m.total_comm_delay_s);
    fmt::print(out, "  total_rate_bps          {:.6g}\n", m.total_rate_bps);
    fmt::print(out, "  served                  {}\n", m.served_count);
    fmt::print(out, "  never_served            {}\n", m.never_served_count);
    fmt::print(out, "  cycles_used             {}\n", m.cycles_used);
}

} // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cycle-driven simulator of RIS-assisted ground/air/space MEC offloading", "rismec_sim"};
    app.footer(kExitCodeHelp);

    std::string scenario_path;
    std::vector<int> case_numbers;
    std::string sweep_text;
    std::string ris_text;
    std::vector<std::uint64_t> seeds;
    std::optional<std::size_t> users;
    std::string out_path;
    bool describe = false;
    unsigned threads = 0;

    app.add_option("--scenario", scenario_path, "Scenario file (defaults to the built-in scenario)");
    app.add_option("--case", case_numbers, "Offloading case 1, 2 or 3; repeatable")
        ->check(CLI::IsMember({1, 2, 3}))
        ->take_all();
    app.add_option("--sweep", sweep_text, "Sweep axis:start:stop:step, axis one of users, servers, ris");
    app.add_option("--ris", ris_text, "RIS assistance: on, off or both")->check(CLI::IsMember({"on", "off", "both"}));
    app.add_option("--seed", seeds, "Placement seed; repeatable")->take_all();
    app.add_option("--users", users, "Number of seeded users (overrides the scenario)");
    app.add_option("--threads", threads, "Worker threads for sweeps (0: all cores)");
    app.add_option("--out", out_path, "CSV destination (default: standard output)");
    app.add_flag("--describe", describe, "Print the resolved scenario and exit");

    std::vector<const char*> argv{"rismec_sim"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        fmt::print(err, "error: {}\nRun with --help for usage.\n", e.what());
        return exit_code::bad_argument;
    }

    ScenarioConfig base;
    try {
        base = scenario_path.empty() ? default_scenario() : load_scenario_file(scenario_path);
    } catch (const std::system_error& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_code::scenario_unreadable;
    } catch (const ConfigError& e) {
        fmt::print(err, "error: {}: {}\n", scenario_path, e.what());
        return exit_code::scenario_invalid;
    } catch (const ValidationError& e) {
        fmt::print(err, "error: {}: {}\n", scenario_path, e.what());
        return exit_code::scenario_invalid;
    }

    SweepSpec sweep;
    try {
        if (!sweep_text.empty()) {
            auto [axis, values] = parse_sweep(sweep_text);
            sweep.axis = axis;
            sweep.values = std::move(values);
        } else {
            sweep.axis = SweepAxis::None;
            sweep.values = {0};
        }
    } catch (const BadArgument& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_code::bad_argument;
    }

    if (users) {
        if (!base.users.empty()) {
            fmt::print(err, "error: --users cannot resize a scenario with explicit [[user]] blocks\n");
            return exit_code::bad_argument;
        }
        base.user_count = *users;
    }
    for (int n : case_numbers)
        sweep.cases.push_back(case_from_number(n));
    if (sweep.cases.empty()) {
        if (sweep.axis == SweepAxis::None)
            sweep.cases.push_back(base.case_id);
        else
            sweep.cases = {CaseId::Case1, CaseId::Case2, CaseId::Case3};
    }
    sweep.seeds = seeds.empty() ? std::vector<std::uint64_t>{base.seed} : seeds;
    if (ris_text.empty())
        sweep.ris = base.ris_enabled ? RisSetting::On : RisSetting::Off;
    else
        sweep.ris = ris_text == "on" ? RisSetting::On : ris_text == "off" ? RisSetting::Off : RisSetting::Both;

    if (describe) {
        ScenarioConfig resolved = base;
        resolved.case_id = sweep.cases.front();
        resolved.seed = sweep.seeds.front();
        if (sweep.ris != RisSetting::Both)
            resolved.ris_enabled = sweep.ris == RisSetting::On;
        out << serialize_scenario(resolved);
        return exit_code::ok;
    }

    std::vector<ResultRow> rows;
    try {
        rows = run_sweep(base, sweep, threads);
    } catch (const ValidationError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_code::scenario_invalid;
    } catch (const std::exception& e) {
        fmt::print(err, "error: simulation failed: {}\n", e.what());
        return exit_code::runtime_failure;
    }

    try {
        if (!out_path.empty()) {
            write_results(rows, std::filesystem::path(out_path));
        } else if (sweep.axis == SweepAxis::None && rows.size() == 1 && case_numbers.empty() && seeds.empty()) {
            print_summary(out, rows.front());
        } else {
            write_results(rows, out);
        }
    } catch (const ResultsError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_code::output_unwritable;
    }
    return exit_code::ok;
}

} // namespace rismec
