#pragma once

#include "manetsim/location/location_table.hpp"
#include "manetsim/sim/random.hpp"

#include <deque>

namespace manetsim {

// Horizon configuration for trajectory prediction: positions are
// extrapolated width * update_interval seconds ahead.
struct PredictionConfig {
    int width = 15;                   // number of update intervals
    double update_interval = 0.25;    // seconds
    double max_position_error = 0.0;  // meters, 0 disables positioning noise

    double horizon() const { return width * update_interval; }
};

// Distorts a true position with a bounded noise vector: a uniformly random
// direction scaled by a magnitude uniform in [0, e_max]. e_max = 0 returns
// the position untouched without consuming random draws.
Vec3 apply_gnss_noise(const Vec3& true_pos, double e_max, RandomStream& rng);

// Predicts the node's position `horizon` seconds after its newest entry.
// The speed estimate is the mean sample-to-sample speed over the history
// (falling back to the newest steering magnitude for a single sample). With
// waypoints available the prediction advances along the piecewise-linear
// waypoint path; otherwise it extrapolates along the steering vector.
Vec3 predict_position(const std::deque<MobilityEntry>& history, double horizon);

// Euclidean distance between the two nodes' predicted positions. Throws
// std::out_of_range if either node is unknown; callers treat such links as
// unusable.
double predicted_distance(const LocationTable& table, NodeId a, NodeId b, double horizon);

} // namespace manetsim
