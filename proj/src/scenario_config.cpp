#include "manetsim/experiment/scenario_config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace manetsim {

ChannelModel ScenarioConfig::medium_channel() const {
    ChannelModel model;
    model.carrier_frequency_hz = freq_hz;
    model.path_loss_exponent = alpha;
    model.nakagami_m = nakagami_m;
    model.reference_distance_m = reference_distance;
    model.tx_power_dbm = tx_dbm;
    model.sensitivity_dbm = sensitivity_dbm;
    model.mode = (channel == "nakagami") ? ChannelMode::Stochastic : ChannelMode::Deterministic;
    return model;
}

ChannelModel ScenarioConfig::assumed_channel() const { return medium_channel().deterministic_view(); }

ProtocolKind ScenarioConfig::protocol_kind() const {
    auto kind = parse_protocol(protocol);
    if (!kind)
        throw ConfigError("unknown protocol: " + protocol);
    return *kind;
}

ProtocolParams ScenarioConfig::protocol_params() const {
    ProtocolParams params;
    params.hello_interval = hello_interval;
    params.tc_interval = tc_interval;
    params.ogm_interval = ogm_interval;
    params.telemetry_interval = telemetry_interval;
    params.window = static_cast<std::size_t>(window);
    params.score_weight_dist = w_dist;
    params.score_weight_pred = w_pred;
    return params;
}

void ScenarioConfig::validate() const {
    const auto fail = [](const std::string& msg) { throw ConfigError("invalid config: " + msg); };
    if (area_x <= 0.0 || area_y <= 0.0 || area_z <= 0.0)
        fail("mission area extents must be strictly positive");
    if (trace_file.empty() && agents < 2)
        fail("agent count must be >= 2");
    if (exploration_weight < 0.0 || collision_weight < 0.0)
        fail("steering weights must be non-negative");
    if (exploration_weight + collision_weight <= 0.0)
        fail("at least one steering weight must be positive");
    if (min_distance <= 0.0)
        fail("collision-avoidance min_distance must be positive");
    if (dt_u <= 0.0)
        fail("mobility update interval dt_u must be positive");
    if (speed_kmh < 0.0)
        fail("movement speed must be non-negative");
    if (arrival_radius <= 0.0)
        fail("waypoint arrival radius must be positive");
    if (lookahead < 1)
        fail("waypoint lookahead must be >= 1");
    if (nh < 1)
        fail("mobility history size nh must be >= 1");
    if (np < 0)
        fail("prediction width np must be >= 0");
    if (e_max < 0.0)
        fail("max positioning error e_max must be >= 0");
    if (channel != "friis" && channel != "nakagami")
        fail("channel must be friis or nakagami");
    if (!parse_protocol(protocol))
        fail("protocol must be one of olsr, ma-olsr, batman, batmobile");
    if (cbr_bitrate <= 0.0 || cbr_packet <= 0)
        fail("CBR bitrate and packet size must be positive");
    if (telemetry_interval <= 0.0 || ogm_interval <= 0.0 || hello_interval <= 0.0 ||
        tc_interval <= 0.0)
        fail("protocol intervals must be positive");
    if (telemetry_size < 58 + 24 * lookahead)
        fail("telemetry packet size cannot hold the mobility fields");
    if (window < 1)
        fail("reception window must be >= 1");
    if (w_dist < 0.0 || w_pred < 0.0)
        fail("path-score weights must be non-negative");
    if (jitter < 0.0)
        fail("jitter must be non-negative");
    if (mac_bitrate <= 0.0)
        fail("MAC bitrate must be positive");
    if (duration <= 0.0)
        fail("run duration must be positive");
    if (runs < 1)
        fail("run count must be >= 1");
    if (warmup < 0.0 || warmup >= duration)
        fail("warm-up must be non-negative and shorter than the run");
    try {
        medium_channel().validate();
        assumed_channel().max_distance();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

namespace {

template <typename T> bool parse_number(const std::string& s, T& out) {
    if constexpr (std::is_floating_point_v<T>) {
        const char* begin = s.data();
        const char* end = begin + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        return ec == std::errc{} && ptr == end;
    } else {
        const char* begin = s.data();
        const char* end = begin + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        return ec == std::errc{} && ptr == end;
    }
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, e - b + 1);
}

} // namespace

void apply_config_entry(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    const auto bad_value = [&] {
        throw ConfigError("invalid value for `" + key + "`: " + value);
    };
    const auto set_double = [&](double& field) {
        if (!parse_number(value, field))
            bad_value();
    };
    const auto set_int = [&](int& field) {
        if (!parse_number(value, field))
            bad_value();
    };

    if (key == "area_x") set_double(cfg.area_x);
    else if (key == "area_y") set_double(cfg.area_y);
    else if (key == "area_z") set_double(cfg.area_z);
    else if (key == "agents") set_int(cfg.agents);
    else if (key == "exploration_weight") set_double(cfg.exploration_weight);
    else if (key == "collision_weight") set_double(cfg.collision_weight);
    else if (key == "min_distance") set_double(cfg.min_distance);
    else if (key == "dt_u") set_double(cfg.dt_u);
    else if (key == "speed_kmh") set_double(cfg.speed_kmh);
    else if (key == "arrival_radius") set_double(cfg.arrival_radius);
    else if (key == "lookahead") set_int(cfg.lookahead);
    else if (key == "nh") set_int(cfg.nh);
    else if (key == "np") set_int(cfg.np);
    else if (key == "e_max") set_double(cfg.e_max);
    else if (key == "channel") cfg.channel = value;
    else if (key == "alpha") set_double(cfg.alpha);
    else if (key == "nakagami_m") set_int(cfg.nakagami_m);
    else if (key == "freq_hz") set_double(cfg.freq_hz);
    else if (key == "tx_dbm") set_double(cfg.tx_dbm);
    else if (key == "sensitivity_dbm") set_double(cfg.sensitivity_dbm);
    else if (key == "reference_distance") set_double(cfg.reference_distance);
    else if (key == "cbr_bitrate") set_double(cfg.cbr_bitrate);
    else if (key == "cbr_packet") set_int(cfg.cbr_packet);
    else if (key == "protocol") cfg.protocol = value;
    else if (key == "telemetry_interval") set_double(cfg.telemetry_interval);
    else if (key == "telemetry_size") set_int(cfg.telemetry_size);
    else if (key == "ogm_interval") set_double(cfg.ogm_interval);
    else if (key == "hello_interval") set_double(cfg.hello_interval);
    else if (key == "tc_interval") set_double(cfg.tc_interval);
    else if (key == "window") set_int(cfg.window);
    else if (key == "w_dist") set_double(cfg.w_dist);
    else if (key == "w_pred") set_double(cfg.w_pred);
    else if (key == "jitter") set_double(cfg.jitter);
    else if (key == "mac_bitrate") set_double(cfg.mac_bitrate);
    else if (key == "duration") set_double(cfg.duration);
    else if (key == "runs") set_int(cfg.runs);
    else if (key == "warmup") set_double(cfg.warmup);
    else if (key == "seed") {
        if (!parse_number(value, cfg.seed))
            bad_value();
    } else if (key == "bs_x") set_double(cfg.bs_x);
    else if (key == "bs_y") set_double(cfg.bs_y);
    else if (key == "bs_z") set_double(cfg.bs_z);
    else if (key == "record_latency") {
        if (value == "1" || value == "true") cfg.record_latency = true;
        else if (value == "0" || value == "false") cfg.record_latency = false;
        else bad_value();
    } else if (key == "trace_file") cfg.trace_file = value;
    else
        throw ConfigError("unknown config key: " + key);
}

ScenarioConfig parse_config(std::istream& in) {
    ScenarioConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#')
            continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected `key = value`");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected `key = value`");
        apply_config_entry(cfg, key, value);
    }
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

} // namespace manetsim
