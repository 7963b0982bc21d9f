#pragma once

#include "manetsim/channel/channel_model.hpp"
#include "manetsim/routing/protocol.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace manetsim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Full parameter set of one simulation scenario. The defaults reproduce the
// reference scenario: a 500 x 500 x 250 m mission volume, 10 agents flying
// controlled-waypoint exploration at 50 km/h with potential-field collision
// avoidance, a 2 Mbit/s CBR videostream to a static ground station, and the
// 2.4 GHz / 100 mW / -83 dBm radio at 54 Mbit/s.
struct ScenarioConfig {
    // mission area and swarm
    double area_x = 500.0, area_y = 500.0, area_z = 250.0;
    int agents = 10;
    double exploration_weight = 1.0;
    double collision_weight = 10.0;
    double min_distance = 30.0; // collision-avoidance trigger threshold, m
    double dt_u = 0.25;         // mobility update interval, s
    double speed_kmh = 50.0;
    double arrival_radius = 5.0;
    int lookahead = 3; // pre-drawn future waypoints

    // location service and prediction
    int nh = 5;         // mobility history size
    int np = 15;        // prediction width, in units of dt_u
    double e_max = 0.0; // max positioning error, m (0 = ideal GNSS)

    // channel
    std::string channel = "friis"; // friis (deterministic) | nakagami (fading)
    double alpha = 2.75;           // path-loss exponent
    int nakagami_m = 2;
    double freq_hz = 2.4e9;
    double tx_dbm = 20.0; // 100 mW
    double sensitivity_dbm = -83.0;
    double reference_distance = 1.0;

    // application traffic
    double cbr_bitrate = 2e6;
    int cbr_packet = 1460;

    // routing
    std::string protocol = "olsr"; // olsr | ma-olsr | batman | batmobile
    double telemetry_interval = 0.25;
    int telemetry_size = 1000;
    double ogm_interval = 0.5;
    double hello_interval = 0.5;
    double tc_interval = 1.0;
    int window = 64;     // reception window, distinct sequence numbers
    double w_dist = 0.5; // path-score weight of the current distance
    double w_pred = 0.5; // path-score weight of the predicted distance
    double jitter = 0.0; // uniform broadcast jitter bound, s

    // MAC abstraction
    double mac_bitrate = 54e6;

    // run control
    double duration = 300.0;
    int runs = 50;
    double warmup = 10.0; // excluded from PDR counting
    std::uint64_t seed = 1;
    double bs_x = 250.0, bs_y = 0.0, bs_z = 0.0; // base-station position
    bool record_latency = false;
    std::string trace_file; // replay mobility from a trace instead

    double speed_mps() const { return speed_kmh / 3.6; }
    double horizon() const { return np * dt_u; }

    // The medium's channel (fading in nakagami mode) and the deterministic
    // channel assumption agents use for link-reach decisions.
    ChannelModel medium_channel() const;
    ChannelModel assumed_channel() const;

    ProtocolKind protocol_kind() const;
    ProtocolParams protocol_params() const;

    // Throws ConfigError with a description of the first invalid field.
    void validate() const;
};

// Applies one `key = value` assignment. Unknown keys are errors.
void apply_config_entry(ScenarioConfig& cfg, const std::string& key, const std::string& value);

ScenarioConfig parse_config(std::istream& in);
ScenarioConfig parse_config_file(const std::string& path);

} // namespace manetsim
