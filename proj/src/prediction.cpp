#include "manetsim/location/prediction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace manetsim {

Vec3 apply_gnss_noise(const Vec3& true_pos, double e_max, RandomStream& rng) {
    if (e_max < 0.0)
        throw std::invalid_argument("apply_gnss_noise: e_max must be non-negative");
    if (e_max == 0.0)
        return true_pos;
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = rng.uniform(0.0, e_max);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return true_pos + Vec3{s * std::cos(phi), s * std::sin(phi), z} * r;
}

namespace {

// Mean speed over consecutive history pairs; steering magnitude for a
// single sample.
double estimate_speed(const std::deque<MobilityEntry>& history) {
    if (history.size() < 2)
        return history.back().steering.norm();
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 1; i < history.size(); ++i) {
        const double dt = history[i].timestamp - history[i - 1].timestamp;
        if (dt <= 0.0)
            continue;
        sum += distance(history[i].position, history[i - 1].position) / dt;
        ++pairs;
    }
    if (pairs == 0)
        return history.back().steering.norm();
    return sum / static_cast<double>(pairs);
}

// Advances `dist` meters along the piecewise-linear path from `start`
// through the waypoints, stopping at the final waypoint if the path runs
// out.
Vec3 advance_along_path(const Vec3& start, const std::vector<Vec3>& waypoints, double dist) {
    Vec3 at = start;
    for (const Vec3& wp : waypoints) {
        const double leg = distance(at, wp);
        if (leg >= dist)
            return leg > 0.0 ? at + (wp - at) * (dist / leg) : at;
        dist -= leg;
        at = wp;
    }
    return at;
}

} // namespace

Vec3 predict_position(const std::deque<MobilityEntry>& history, double horizon) {
    if (history.empty())
        throw std::out_of_range("predict_position: unknown node (empty history)");
    if (horizon < 0.0)
        throw std::invalid_argument("predict_position: horizon must be non-negative");
    const MobilityEntry& newest = history.back();
    if (horizon == 0.0)
        return newest.position;
    const double speed = estimate_speed(history);
    if (speed == 0.0)
        return newest.position;
    const double dist = speed * horizon;
    if (!newest.waypoints.empty())
        return advance_along_path(newest.position, newest.waypoints, dist);
    const Vec3 dir = newest.steering.normalized();
    return newest.position + dir * dist;
}

double predicted_distance(const LocationTable& table, NodeId a, NodeId b, double horizon) {
    const Vec3 pa = predict_position(table.history(a), horizon);
    const Vec3 pb = predict_position(table.history(b), horizon);
    return distance(pa, pb);
}

} // namespace manetsim
