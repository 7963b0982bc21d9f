#pragma once

#include <cstdint>

namespace manetsim {

using NodeId = std::uint32_t;

// Virtual simulation time in seconds.
using SimTime = double;

} // namespace manetsim
