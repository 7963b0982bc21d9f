#pragma once

#include "manetsim/sim/random.hpp"
#include "manetsim/vec3.hpp"

#include <algorithm>
#include <stdexcept>

namespace manetsim {

// Axis-aligned mission volume with its origin at (0,0,0).
struct MissionArea {
    Vec3 extents{500.0, 500.0, 250.0};

    MissionArea() = default;
    MissionArea(double x, double y, double z) : extents{x, y, z} {
        if (x <= 0.0 || y <= 0.0 || z <= 0.0)
            throw std::invalid_argument("MissionArea: extents must be strictly positive");
    }

    bool contains(const Vec3& p) const {
        return p.x >= 0.0 && p.x <= extents.x && p.y >= 0.0 && p.y <= extents.y && p.z >= 0.0 &&
               p.z <= extents.z;
    }

    Vec3 clamp(const Vec3& p) const {
        return {std::clamp(p.x, 0.0, extents.x), std::clamp(p.y, 0.0, extents.y),
                std::clamp(p.z, 0.0, extents.z)};
    }

    Vec3 random_point(RandomStream& rng) const {
        return {rng.uniform(0.0, extents.x), rng.uniform(0.0, extents.y),
                rng.uniform(0.0, extents.z)};
    }
};

} // namespace manetsim
