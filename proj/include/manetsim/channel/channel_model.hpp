#pragma once

#include "manetsim/sim/random.hpp"

#include <cmath>

namespace manetsim {

inline constexpr double kSpeedOfLight = 2.998e8; // m/s

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

enum class ChannelMode {
    Deterministic, // mean path loss only (Friis-style)
    Stochastic,    // Nakagami-m fading around the mean
};

// Log-distance path-loss model with optional Nakagami-m fading. The
// exponent 2 recovers free space; the stochastic mode draws the
// instantaneous received power from a Gamma distribution with shape m whose
// mean is the deterministic received power (block fading per frame).
struct ChannelModel {
    double carrier_frequency_hz = 2.4e9;
    double path_loss_exponent = 2.75;
    int nakagami_m = 2;
    double reference_distance_m = 1.0;
    double tx_power_dbm = 20.0;
    double sensitivity_dbm = -83.0;
    ChannelMode mode = ChannelMode::Deterministic;

    void validate() const;

    // Free-space loss at the reference distance.
    double reference_loss_db() const;

    // Mean path loss at distance d (clamped to the reference distance).
    double path_loss_db(double d) const;

    // Maximum communication distance: inverts the mean path loss at the
    // receiver sensitivity. Throws if the link budget is non-positive.
    double max_distance() const;

    // Reception decision for one transmission at distance d. Deterministic
    // mode compares the mean received power against the sensitivity; the
    // stochastic mode draws the instantaneous power from the Nakagami
    // fading distribution. Distances below the reference distance are
    // treated as the reference distance.
    bool reception_success(double d, RandomStream& rng) const;

    double mean_rx_power_dbm(double d) const { return tx_power_dbm - path_loss_db(d); }

    // The same channel without fading, e.g. as an agent's assumption about
    // link reach.
    ChannelModel deterministic_view() const {
        ChannelModel copy = *this;
        copy.mode = ChannelMode::Deterministic;
        return copy;
    }
};

// Gamma(shape m, mean mu) sample via the sum of m exponentials. Consumes
// exactly m draws from the stream.
double sample_gamma_mean(int m, double mu, RandomStream& rng);

} // namespace manetsim
