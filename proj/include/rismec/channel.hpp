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

#ifndef RISMEC_CHANNEL_HPP
#define RISMEC_CHANNEL_HPP

#include <optional>

#include "rismec/scenario.hpp"

namespace rismec {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Log-distance path loss: reference_loss_db + 10 * exponent * log10(d).
struct PathLossModel
{
    double exponent = 2.0;
    double reference_loss_db = 38.46;  // at 1 m
};

// Distances below 1 m are clamped to the reference distance.
double path_loss_db(double distance_m, const PathLossModel& model) noexcept;

double db_to_linear(double db) noexcept;
double linear_to_db(double lin) noexcept;

// Received amplitude of the direct path plus an ideally phase-aligned RIS:
// sqrt(direct) + n * sqrt(g_user_ris * g_ris_dest). Square it for power.
double ris_composite_amplitude(double direct_gain_lin, double g_user_ris_lin, double g_ris_dest_lin,
                               int n_elements) noexcept;

double snr_lin(double tx_power_dbm, double total_power_gain_lin, double noise_dbm) noexcept;

double shannon_rate(double bandwidth_hz, double snr) noexcept;

double propagation_delay(double distance_m) noexcept;

// Uplink description for one user->platform link.
struct LinkBudget
{
    double direct_gain_lin = 0.0;
    double ris_gain_lin = 0.0;    // power of the reflected path alone; 0 without a RIS
    double total_gain_lin = 0.0;  // square of the composite amplitude
    double snr_lin = 0.0;
    double bandwidth_hz = 0.0;
    double rate_bps = 0.0;
    double prop_delay_s = 0.0;  // one way, direct distance
    std::optional<int> ris_id;
};

// Path-loss model for the direct path to a platform of `tier`:
// NLoS for ground/air, LoS for the space tiers.
PathLossModel direct_model(Tier tier, const RadioParams& radio) noexcept;
PathLossModel ris_segment_model(const RadioParams& radio) noexcept;

// Throws ContractViolation when `ris` is given for a space-tier server or
// its segment differs from the server tier.
LinkBudget link_budget(const Position3D& user, const ServerSpec& server, const std::optional<RisSpec>& ris,
                       double allocated_bandwidth_hz, const RadioParams& radio);

} // namespace rismec

#endif
