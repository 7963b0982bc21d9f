#include "manetsim/channel/channel_model.hpp"

#include <numbers>
#include <stdexcept>

namespace manetsim {

void ChannelModel::validate() const {
    if (carrier_frequency_hz <= 0.0)
        throw std::invalid_argument("channel: carrier frequency must be positive");
    if (path_loss_exponent < 2.0)
        throw std::invalid_argument("channel: path-loss exponent must be >= 2");
    if (nakagami_m < 1)
        throw std::invalid_argument("channel: Nakagami shape must be >= 1");
    if (reference_distance_m <= 0.0)
        throw std::invalid_argument("channel: reference distance must be positive");
}

double ChannelModel::reference_loss_db() const {
    return 20.0 * std::log10(4.0 * std::numbers::pi * reference_distance_m *
                             carrier_frequency_hz / kSpeedOfLight);
}

double ChannelModel::path_loss_db(double d) const {
    if (d <= 0.0)
        throw std::invalid_argument("path_loss_db: distance must be positive");
    if (d < reference_distance_m)
        d = reference_distance_m;
    return reference_loss_db() +
           10.0 * path_loss_exponent * std::log10(d / reference_distance_m);
}

double ChannelModel::max_distance() const {
    const double budget = tx_power_dbm - sensitivity_dbm;
    if (budget <= 0.0)
        throw std::invalid_argument("max_distance: no link budget (tx power <= sensitivity)");
    return reference_distance_m *
           std::pow(10.0, (budget - reference_loss_db()) / (10.0 * path_loss_exponent));
}

double sample_gamma_mean(int m, double mu, RandomStream& rng) {
    if (m < 1)
        throw std::invalid_argument("sample_gamma_mean: shape must be >= 1");
    // Erlang: sum of m exponentials with scale mu/m.
    double log_product = 0.0;
    for (int i = 0; i < m; ++i)
        log_product += std::log(1.0 - rng.next_double());
    return -(mu / m) * log_product;
}

bool ChannelModel::reception_success(double d, RandomStream& rng) const {
    if (d < reference_distance_m)
        d = reference_distance_m;
    const double mean_dbm = mean_rx_power_dbm(d);
    if (mode == ChannelMode::Deterministic)
        return mean_dbm >= sensitivity_dbm;
    const double instantaneous_mw = sample_gamma_mean(nakagami_m, dbm_to_mw(mean_dbm), rng);
    return instantaneous_mw >= dbm_to_mw(sensitivity_dbm);
}

} // namespace manetsim
