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

#include "rismec/cli.hpp"
#include "rismec/scenario_io.hpp"

using namespace rismec;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name)
{
    const std::filesystem::path dir = RISMEC_TEST_TMPDIR;
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

} // namespace

TEST_CASE("no arguments prints a summary of the default run")
{
    const auto r = run({});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("case case3 | ris on | seed 1") != std::string::npos);
    CHECK(r.out.find("total_delay_s") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("help")
{
    const auto r = run({"--help"});
    CHECK(r.code == exit_code::ok);
    CHECK(r.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("users sweep to a file")
{
    const auto path = tmp("cli_users.csv");
    std::filesystem::remove(path);
    const auto r = run({"--case", "3", "--sweep", "users:5:30:5", "--out", path.string()});
    CHECK(r.code == exit_code::ok);
    const auto text = slurp(path);
    CHECK(lines(text) == 7);
    CHECK(text.find("3,1,users,30,1,") != std::string::npos);
}

TEST_CASE("CSV to stdout when cases or seeds are explicit")
{
    const auto r = run({"--case", "1", "2", "--seed", "4", "5", "--ris", "both"});
    CHECK(r.code == exit_code::ok);
    CHECK(lines(r.out) == 1 + 2 * 2 * 2);
    CHECK(r.out.find("2,0,none,0,5,") != std::string::npos);
}

TEST_CASE("runs are reproducible")
{
    const std::vector<std::string> args = {"--sweep", "ris:0:6:2", "--ris", "both", "--seed", "3"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::vector<std::string> threaded = args;
    threaded.insert(threaded.end(), {"--threads", "1"});
    CHECK(run(threaded).out == a.out);
}

TEST_CASE("describe round-trips through the loader")
{
    const auto r = run({"--describe", "--case", "2", "--seed", "9", "--ris", "off"});
    CHECK(r.code == exit_code::ok);
    const auto c = load_scenario(r.out);
    CHECK(c.case_id == CaseId::Case2);
    CHECK(c.seed == 9);
    CHECK_FALSE(c.ris_enabled);

    const auto path = tmp("cli_described.toml");
    {
        std::ofstream f(path);
        f << r.out;
    }
    const auto again = run({"--scenario", path.string(), "--describe"});
    CHECK(again.code == 0);
    CHECK(again.out == r.out);
}

TEST_CASE("argument errors")
{
    CHECK(run({"--case", "9"}).code == exit_code::bad_argument);
    CHECK(run({"--bogus"}).code == exit_code::bad_argument);
    CHECK(run({"--ris", "maybe"}).code == exit_code::bad_argument);
    CHECK(run({"--sweep", "users:5:30"}).code == exit_code::bad_argument);
    CHECK(run({"--sweep", "cats:1:2:1"}).code == exit_code::bad_argument);
    CHECK(run({"--sweep", "users:30:5:5"}).code == exit_code::bad_argument);
    CHECK(run({"--sweep", "users:5:30:0"}).code == exit_code::bad_argument);
    CHECK(run({"--sweep", "users:a:30:5"}).code == exit_code::bad_argument);
    const auto r = run({"--case", "9"});
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("scenario errors")
{
    CHECK(run({"--scenario", tmp("does_not_exist.toml").string()}).code == exit_code::scenario_unreadable);

    const auto malformed = tmp("cli_malformed.toml");
    {
        std::ofstream f(malformed);
        f << "delta_s = = 3\n";
    }
    auto r = run({"--scenario", malformed.string()});
    CHECK(r.code == exit_code::scenario_invalid);
    CHECK(r.err.find("line 1") != std::string::npos);

    const auto invalid = tmp("cli_invalid.toml");
    {
        std::ofstream f(invalid);
        f << "delta_s = -5\n";
    }
    r = run({"--scenario", invalid.string()});
    CHECK(r.code == exit_code::scenario_invalid);
    CHECK(r.err.find("DELTA_NONPOSITIVE") != std::string::npos);

    // Sweeping past the available surfaces is a scenario problem.
    CHECK(run({"--sweep", "ris:0:8:1"}).code != exit_code::ok);
}

TEST_CASE("unwritable output")
{
    const auto r = run({"--out", (tmp("missing_dir") / "nested" / "x.csv").string()});
    CHECK(r.code == exit_code::output_unwritable);
}

TEST_CASE("--users overrides the scenario")
{
    const auto r = run({"--users", "4", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",none,0,1,") != std::string::npos);
    CHECK(r.out.find(",4,0,") != std::string::npos);  // served, never_served
}
