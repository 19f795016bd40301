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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rismec/sweep.hpp"

using namespace rismec;

namespace {

std::vector<ResultRow> small_grid(unsigned threads)
{
    SweepSpec s;
    s.axis = SweepAxis::Users;
    s.values = {5, 10, 15, 20, 25, 30};
    s.cases = {CaseId::Case1, CaseId::Case2, CaseId::Case3};
    s.ris = RisSetting::Both;
    s.seeds = {1};
    return run_sweep(default_scenario(), s, threads);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("sweep grid order")
{
    const auto rows = small_grid(0);
    REQUIRE(rows.size() == 36);
    std::size_t i = 0;
    for (CaseId k : {CaseId::Case1, CaseId::Case2, CaseId::Case3})
        for (bool ris : {false, true})
            for (int n : {5, 10, 15, 20, 25, 30}) {
                CHECK(rows[i].case_id == k);
                CHECK(rows[i].ris_enabled == ris);
                CHECK(rows[i].axis == SweepAxis::Users);
                CHECK(rows[i].axis_value == n);
                CHECK(rows[i].metrics.served_count + rows[i].metrics.never_served_count == std::size_t(n));
                ++i;
            }
}

TEST_CASE("thread count does not change results")
{
    const auto one = small_grid(1);
    CHECK(small_grid(3) == one);
    CHECK(small_grid(0) == one);
}

TEST_CASE("zero surfaces make RIS on equal RIS off")
{
    SweepSpec s;
    s.axis = SweepAxis::RisCount;
    s.values = {0};
    s.cases = {CaseId::Case3};
    s.ris = RisSetting::Both;
    s.seeds = {1, 2};
    const auto rows = run_sweep(default_scenario(), s);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].metrics == rows[2].metrics);
    CHECK(rows[1].metrics == rows[3].metrics);
}

TEST_CASE("more ground servers never raise computing delay")
{
    SweepSpec s;
    s.axis = SweepAxis::GroundServers;
    s.values = {1, 2, 3, 4};
    s.cases = {CaseId::Case1};
    s.ris = RisSetting::On;
    s.seeds = {1};
    const auto rows = run_sweep(default_scenario(), s);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].metrics.total_computing_delay_s <= rows[i - 1].metrics.total_computing_delay_s);
}

TEST_CASE("apply_axis")
{
    const auto base = default_scenario();
    CHECK(apply_axis(base, SweepAxis::Users, 12).user_count == 12);
    CHECK(find_server(apply_axis(base, SweepAxis::GroundServers, 3), Tier::Ground)->count == 3);
    CHECK(apply_axis(base, SweepAxis::None, 0) == base);

    const auto r5 = apply_axis(base, SweepAxis::RisCount, 5);
    REQUIRE(r5.rises.size() == 5);
    int ground = 0;
    for (const auto& r : r5.rises)
        ground += r.segment == Tier::Ground;
    CHECK(ground == 3);
    CHECK(apply_axis(base, SweepAxis::RisCount, 0).rises.empty());
    CHECK_THROWS(apply_axis(base, SweepAxis::RisCount, 7));

    auto explicit_users = base;
    explicit_users.users = {{{0, 0, 0}, {}}, {{1, 1, 0}, {}}, {{2, 2, 0}, {}}};
    explicit_users.user_count = 3;
    const auto two = apply_axis(explicit_users, SweepAxis::Users, 2);
    CHECK(two.users.size() == 2);
    CHECK(two.user_count == 2);
    CHECK_THROWS(apply_axis(explicit_users, SweepAxis::Users, 4));
}

TEST_CASE("validate_sweep")
{
    SweepSpec good;
    good.axis = SweepAxis::Users;
    good.values = {5, 10};
    good.cases = {CaseId::Case1};
    good.seeds = {1};
    CHECK(validate_sweep(good).empty());

    auto codes = [](const SweepSpec& s) {
        std::vector<std::string> out;
        for (const auto& v : validate_sweep(s))
            out.push_back(v.code);
        return out;
    };
    auto s = good;
    s.values = {};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_VALUES_EMPTY"});
    s = good;
    s.values = {10, 5};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_VALUES_NOT_ASCENDING"});
    s = good;
    s.values = {5, 5};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_VALUES_NOT_ASCENDING"});
    s = good;
    s.cases = {};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_CASES_EMPTY"});
    s = good;
    s.seeds = {};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_SEEDS_EMPTY"});
    s = good;
    s.axis = SweepAxis::GroundServers;
    s.values = {0, 1};
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_VALUE_OUT_OF_RANGE"});
    s = good;
    s.axis = SweepAxis::None;
    CHECK(codes(s) == std::vector<std::string>{"SWEEP_NONE_MULTIPLE"});

    CHECK_THROWS_AS(run_sweep(default_scenario(), s), ValidationError);
}

TEST_CASE("replication seeds")
{
    CHECK(replication_seeds(7, 3) == std::vector<std::uint64_t>{7, 8, 9});
    CHECK(replication_seeds(7, 0).empty());
}

TEST_CASE("CSV output")
{
    const auto rows = small_grid(0);
    std::ostringstream one;
    const std::size_t bytes = write_results(std::span(rows).first(1), one);
    const std::string text = one.str();
    CHECK(bytes == text.size());
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    CHECK(text.starts_with(std::string(csv_header()) + "\n"));
    CHECK(text.find("\n1,0,users,5,1,") != std::string::npos);

    std::ostringstream a, b;
    write_results(rows, a);
    write_results(small_grid(2), b);
    CHECK(a.str() == b.str());

    std::ostringstream empty;
    try {
        write_results({}, empty);
        FAIL("expected ResultsError");
    } catch (const ResultsError& e) {
        CHECK(e.code() == "EMPTY_RESULTS");
    }
}

TEST_CASE("CSV to file")
{
    const std::filesystem::path dir = RISMEC_TEST_TMPDIR;
    std::filesystem::create_directories(dir);
    const auto rows = small_grid(0);

    const auto path = dir / "sweep_rows.csv";
    const std::size_t bytes = write_results(rows, path);
    std::ostringstream mem;
    write_results(rows, mem);
    CHECK(slurp(path) == mem.str());
    CHECK(bytes == mem.str().size());

    try {
        write_results(rows, dir / "no_such_dir" / "x.csv");
        FAIL("expected ResultsError");
    } catch (const ResultsError& e) {
        CHECK(e.code() == "DESTINATION_UNWRITABLE");
    }
}
