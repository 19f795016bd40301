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

#ifndef RISMEC_SWEEP_HPP
#define RISMEC_SWEEP_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rismec/scenario.hpp"
#include "rismec/simulation.hpp"

namespace rismec {

enum class SweepAxis : std::uint8_t { None, Users, GroundServers, RisCount };

std::string_view axis_name(SweepAxis a) noexcept;  // none, users, servers, ris
std::optional<SweepAxis> parse_axis(std::string_view name) noexcept;

enum class RisSetting : std::uint8_t { Off, On, Both };

struct SweepSpec
{
    SweepAxis axis = SweepAxis::None;
    std::vector<int> values;  // strictly ascending; a single value for None
    std::vector<CaseId> cases;
    RisSetting ris = RisSetting::Both;
    std::vector<std::uint64_t> seeds;  // one replication per seed
};

std::vector<std::uint64_t> replication_seeds(std::uint64_t base, int replications);

// Problems with the sweep definition itself; empty means usable.
std::vector<Violation> validate_sweep(const SweepSpec& sweep);

struct ResultRow
{
    CaseId case_id = CaseId::Case3;
    bool ris_enabled = true;
    SweepAxis axis = SweepAxis::None;
    int axis_value = 0;
    std::uint64_t seed = 0;
    Metrics metrics;

    bool operator==(const ResultRow&) const = default;
};

// The scenario evaluated at one axis point.
//   Users:         user_count = value (or the first `value` explicit users)
//   GroundServers: ground ServerSpec.count = value
//   RisCount:      first ceil(value/2) ground and floor(value/2) air RISs
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, int value);

// Cartesian product cases x ris settings x values x seeds, rows in that
// lexicographic order. Cells run on up to `threads` workers (0: hardware
// concurrency); the output does not depend on the worker count.
std::vector<ResultRow> run_sweep(const ScenarioConfig& base, const SweepSpec& sweep, unsigned threads = 0);

std::string_view csv_header() noexcept;

// CSV with header, floats at 6 significant digits. Returns bytes written.
// Throws ResultsError("EMPTY_RESULTS") for no rows and
// ResultsError("WRITE_FAILED") when the stream goes bad.
std::size_t write_results(std::span<const ResultRow> rows, std::ostream& out);

// ResultsError("DESTINATION_UNWRITABLE") if the file cannot be opened.
std::size_t write_results(std::span<const ResultRow> rows, const std::filesystem::path& path);

} // namespace rismec

#endif
