#pragma once

#include "manetsim/mobility/mission_area.hpp"
#include "manetsim/sim/random.hpp"
#include "manetsim/vec3.hpp"

#include <deque>
#include <span>
#include <vector>

namespace manetsim {

// One steering behavior's vote for the current tick: an absolute desired
// velocity in m/s plus its importance weight. Weight 0 means the steering
// is inert this tick.
struct SteeringOutput {
    Vec3 desired;
    double weight = 0.0;
};

// Weighted mean of the active steering outputs. Throws if no output has a
// positive weight.
Vec3 combine_steerings(std::span<const SteeringOutput> outputs);

// Pre-drawn future waypoints of one agent. The queue is kept at `lookahead`
// entries by replenishment with uniformly random points inside the mission
// area, so the planned trajectory is always known ahead of time.
struct WaypointQueue {
    std::deque<Vec3> targets;
    double arrival_radius = 5.0;
    std::size_t lookahead = 3;

    void replenish(const MissionArea& area, RandomStream& rng) {
        while (targets.size() < lookahead)
            targets.push_back(area.random_point(rng));
    }
};

// Exploration steering: head for the next waypoint at the demanded speed.
// Reaching a waypoint (within arrival_radius) pops it and draws a fresh one
// before the direction is computed.
SteeringOutput controlled_waypoint_step(const Vec3& pos, WaypointQueue& queue, double speed,
                                        const MissionArea& area, RandomStream& rng,
                                        double weight);

// Separation steering: potential-field repulsion away from every neighbor
// closer than min_distance, ramping linearly from 0 at the threshold to the
// full max_speed at contact. Coincident neighbors repel along +x.
SteeringOutput collision_avoidance_step(const Vec3& pos, std::span<const Vec3> neighbor_positions,
                                        double min_distance, double max_speed, double weight);

// Cohesion steering: attraction toward the centroid of the given swarm
// positions. Inert when no neighbors are known.
SteeringOutput cohesion_step(const Vec3& pos, std::span<const Vec3> neighbor_positions,
                             double max_speed, double weight);

// Alignment steering: match the neighbors' mean steering vector.
SteeringOutput alignment_step(std::span<const Vec3> neighbor_steerings, double weight);

// Locomotion: clamp the demanded velocity to the vehicle's maximum speed,
// integrate over dt and keep the result inside the mission area.
Vec3 locomotion_apply(const Vec3& pos, const Vec3& desired_velocity, double dt, double v_max,
                      const MissionArea& area);

} // namespace manetsim
