#include "manetsim/mobility/steering.hpp"

#include <stdexcept>

namespace manetsim {

Vec3 combine_steerings(std::span<const SteeringOutput> outputs) {
    Vec3 sum;
    double total_weight = 0.0;
    for (const auto& out : outputs) {
        if (out.weight < 0.0)
            throw std::invalid_argument("combine_steerings: negative weight");
        sum += out.desired * out.weight;
        total_weight += out.weight;
    }
    if (total_weight <= 0.0)
        throw std::invalid_argument("combine_steerings: no active steering");
    return sum / total_weight;
}

SteeringOutput controlled_waypoint_step(const Vec3& pos, WaypointQueue& queue, double speed,
                                        const MissionArea& area, RandomStream& rng,
                                        double weight) {
    queue.replenish(area, rng);
    if (distance(pos, queue.targets.front()) <= queue.arrival_radius) {
        queue.targets.pop_front();
        queue.targets.push_back(area.random_point(rng));
    }
    const Vec3 dir = (queue.targets.front() - pos).normalized();
    return {dir * speed, weight};
}

SteeringOutput collision_avoidance_step(const Vec3& pos, std::span<const Vec3> neighbor_positions,
                                        double min_distance, double max_speed, double weight) {
    if (min_distance <= 0.0)
        throw std::invalid_argument("collision_avoidance_step: min_distance must be positive");
    Vec3 repulsion;
    for (const auto& nbr : neighbor_positions) {
        const Vec3 away = pos - nbr;
        const double d = away.norm();
        if (d >= min_distance)
            continue;
        if (d == 0.0) {
            repulsion += Vec3{1.0, 0.0, 0.0}; // coincident: deterministic fallback
            continue;
        }
        repulsion += away.normalized() * ((min_distance - d) / min_distance);
    }
    // Inert (weight 0) while nothing is inside the threshold, so the
    // steering does not dilute the weighted mean.
    if (repulsion == Vec3{})
        return {Vec3{}, 0.0};
    return {repulsion * max_speed, weight};
}

SteeringOutput cohesion_step(const Vec3& pos, std::span<const Vec3> neighbor_positions,
                             double max_speed, double weight) {
    if (neighbor_positions.empty())
        return {Vec3{}, 0.0};
    Vec3 centroid;
    for (const auto& nbr : neighbor_positions)
        centroid += nbr;
    centroid = centroid / static_cast<double>(neighbor_positions.size());
    return {(centroid - pos).normalized() * max_speed, weight};
}

SteeringOutput alignment_step(std::span<const Vec3> neighbor_steerings, double weight) {
    if (neighbor_steerings.empty())
        return {Vec3{}, 0.0};
    Vec3 mean;
    for (const auto& s : neighbor_steerings)
        mean += s;
    return {mean / static_cast<double>(neighbor_steerings.size()), weight};
}

Vec3 locomotion_apply(const Vec3& pos, const Vec3& desired_velocity, double dt, double v_max,
                      const MissionArea& area) {
    if (dt <= 0.0 || v_max < 0.0)
        throw std::invalid_argument("locomotion_apply: dt must be positive, v_max non-negative");
    Vec3 v = desired_velocity;
    const double speed = v.norm();
    if (speed > v_max)
        v = (speed > 0.0) ? v * (v_max / speed) : Vec3{};
    return area.clamp(pos + v * dt);
}

} // namespace manetsim
