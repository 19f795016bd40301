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

#include <cmath>

#include "rismec/simulation.hpp"

using namespace rismec;

namespace {

void check_additive(const Metrics& m)
{
    CHECK(m.total_delay_s == m.total_computing_delay_s + m.total_comm_delay_s);
}

} // namespace

TEST_CASE("placement")
{
    const auto a = place_users(30, 200.0, 7);
    const auto b = place_users(30, 200.0, 7);
    CHECK(a == b);
    CHECK(a != place_users(30, 200.0, 8));
    for (const auto& p : a) {
        CHECK(p.x >= -100.0);
        CHECK(p.x < 100.0);
        CHECK(p.y >= -100.0);
        CHECK(p.y < 100.0);
        CHECK(p.z == 0.0);
    }
    // Growing the population keeps the earlier users where they were.
    const auto small = place_users(10, 200.0, 7);
    CHECK(std::equal(small.begin(), small.end(), a.begin()));
    CHECK(place_users(0, 200.0, 7).empty());
}

TEST_CASE("single user")
{
    ScenarioConfig c = default_scenario();
    c.user_count = 1;
    c.case_id = CaseId::Case1;
    const auto r = simulate(c);
    CHECK(r.metrics.served_count == 1);
    CHECK(r.metrics.never_served_count == 0);
    CHECK(r.metrics.cycles_used == 1);
    CHECK(r.metrics.total_computing_delay_s == doctest::Approx(0.6667).epsilon(1e-4));
    CHECK(r.metrics.total_comm_delay_s > 0.0);
    CHECK(r.metrics.total_comm_delay_s < 0.1);
    check_additive(r.metrics);
}

TEST_CASE("no users")
{
    ScenarioConfig c = default_scenario();
    c.user_count = 0;
    const auto m = run_simulation(c);
    CHECK(m == Metrics{});
}

TEST_CASE("deterministic and additive across cases and seeds")
{
    for (CaseId k : {CaseId::Case1, CaseId::Case2, CaseId::Case3}) {
        for (bool ris : {false, true}) {
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                ScenarioConfig c = default_scenario();
                c.case_id = k;
                c.ris_enabled = ris;
                c.seed = seed;
                const auto a = simulate(c);
                const auto b = simulate(c);
                CHECK(a.metrics == b.metrics);
                check_additive(a.metrics);
                CHECK(a.metrics.served_count + a.metrics.never_served_count == c.user_count);

                double rate = 0.0;
                for (const auto& rec : a.records)
                    rate += rec.rate_bps;
                CHECK(rate == doctest::Approx(a.metrics.total_rate_bps));
            }
        }
    }
}

TEST_CASE("RIS never lowers a user's rate in a fixed assignment")
{
    ScenarioConfig c = default_scenario();
    c.ris_enabled = false;
    const auto off = simulate(c);
    c.ris_enabled = true;
    const auto on = simulate(c);
    CHECK(on.metrics.total_rate_bps >= off.metrics.total_rate_bps);
}

TEST_CASE("cycle limit leaves users never served")
{
    ScenarioConfig c = default_scenario();
    c.case_id = CaseId::Case1;
    c.user_count = 30;
    c.max_cycles = 1;
    const auto r = simulate(c);
    CHECK(r.metrics.cycles_used == 1);
    CHECK(r.metrics.never_served_count == 30 - r.metrics.served_count);
    CHECK(r.metrics.never_served_count > 0);
    for (const auto& u : r.never_served)
        CHECK(u.wait_s == doctest::Approx(r.cycles.front().duration_s));
    check_additive(r.metrics);
}

TEST_CASE("an unreachable threshold stops after one cycle")
{
    ScenarioConfig c = default_scenario();
    c.delta_s = 1e-6;
    const auto r = simulate(c);
    CHECK(r.metrics.cycles_used == 1);
    CHECK(r.metrics.served_count == 0);
    CHECK(r.metrics.never_served_count == c.user_count);
    CHECK(r.metrics.total_delay_s == 0.0);
}

TEST_CASE("invalid configuration is rejected")
{
    ScenarioConfig c = default_scenario();
    c.delta_s = -1;
    CHECK_THROWS_AS(run_simulation(c), ValidationError);
}

TEST_CASE("explicit per-user tasks")
{
    ScenarioConfig c = default_scenario();
    c.case_id = CaseId::Case1;
    c.users = {{{0, 0, 0}, TaskProfile{2e5, 3e9, 0}}, {{10, 10, 0}, std::nullopt}};
    c.user_count = 2;
    const auto r = simulate(c);
    REQUIRE(r.records.size() == 2);
    // Two tasks sharing 1.5 GHz: the short one finishes at 2/1.5 s, the long
    // one gets the whole server afterwards.
    CHECK(r.records[1].comp_delay_s == doctest::Approx(2e9 / 1.5e9));
    CHECK(r.records[0].comp_delay_s == doctest::Approx(2e9 / 1.5e9 + 2e9 / 1.5e9));
}
