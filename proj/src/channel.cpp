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

#include "rismec/channel.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace rismec {

double path_loss_db(double distance_m, const PathLossModel& model) noexcept
{
    const double d = std::max(distance_m, 1.0);
    return model.reference_loss_db + 10.0 * model.exponent * std::log10(d);
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) noexcept { return 10.0 * std::log10(lin); }

double ris_composite_amplitude(double direct_gain_lin, double g_user_ris_lin, double g_ris_dest_lin,
                               int n_elements) noexcept
{
    return std::sqrt(direct_gain_lin) + n_elements * std::sqrt(g_user_ris_lin * g_ris_dest_lin);
}

double snr_lin(double tx_power_dbm, double total_power_gain_lin, double noise_dbm) noexcept
{
    return std::pow(10.0, (tx_power_dbm - noise_dbm) / 10.0) * total_power_gain_lin;
}

double shannon_rate(double bandwidth_hz, double snr) noexcept
{
    return bandwidth_hz * std::log2(1.0 + snr);
}

double propagation_delay(double distance_m) noexcept { return distance_m / kSpeedOfLight; }

PathLossModel direct_model(Tier tier, const RadioParams& radio) noexcept
{
    return {is_space_tier(tier) ? radio.los_exponent : radio.nlos_exponent, radio.reference_loss_db};
}

PathLossModel ris_segment_model(const RadioParams& radio) noexcept
{
    return {radio.ris_segment_exponent, radio.reference_loss_db};
}

LinkBudget link_budget(const Position3D& user, const ServerSpec& server, const std::optional<RisSpec>& ris,
                       double allocated_bandwidth_hz, const RadioParams& radio)
{
    if (ris) {
        if (is_space_tier(server.tier))
            throw ContractViolation(fmt::format("RIS {} offered for a {} link", ris->id, tier_name(server.tier)));
        if (ris->segment != server.tier)
            throw ContractViolation(fmt::format("RIS {} belongs to the {} segment, link is {}", ris->id,
                                                tier_name(ris->segment), tier_name(server.tier)));
    }

    const double d = distance(user, server.position);
    LinkBudget lb;
    lb.direct_gain_lin = db_to_linear(-path_loss_db(d, direct_model(server.tier, radio)));

    double g_user_ris = 0.0;
    double g_ris_dest = 0.0;
    int elements = 0;
    if (ris) {
        const auto seg = ris_segment_model(radio);
        g_user_ris = db_to_linear(-path_loss_db(distance(user, ris->position), seg));
        g_ris_dest = db_to_linear(-path_loss_db(distance(ris->position, server.position), seg));
        elements = ris->n_elements;
        lb.ris_id = ris->id;
        const double reflected = elements * std::sqrt(g_user_ris * g_ris_dest);
        lb.ris_gain_lin = reflected * reflected;
    }

    const double amp = ris_composite_amplitude(lb.direct_gain_lin, g_user_ris, g_ris_dest, elements);
    lb.total_gain_lin = elements == 0 ? lb.direct_gain_lin : amp * amp;
    lb.snr_lin = snr_lin(radio.tx_power_dbm, lb.total_gain_lin, radio.noise_dbm);
    lb.bandwidth_hz = allocated_bandwidth_hz;
    lb.rate_bps = shannon_rate(allocated_bandwidth_hz, lb.snr_lin);
    lb.prop_delay_s = propagation_delay(d);
    return lb;
}

} // namespace rismec
