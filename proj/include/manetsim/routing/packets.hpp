#pragma once

#include "manetsim/types.hpp"
#include "manetsim/vec3.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace manetsim {

class PacketParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PacketType : std::uint8_t {
    Hello = 1,
    Tc = 2,
    Ogm = 3,
    MobilityUpdate = 4,
    PathScore = 5,
    Data = 6,
};

// Neighbor-sensing broadcast: the sender's current 1-hop neighbor list.
struct HelloPacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
    std::vector<NodeId> neighbors;
};

// Topology-control flood: the origin's own links.
struct TcPacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
    std::vector<std::pair<NodeId, NodeId>> links;
};

// Originator message: sequence-numbered presence flood.
struct OgmPacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
};

// Carries the origin's individual mobility information for predictive path
// planning: measured position, steering vector and planned waypoints.
// Fixed 1000-byte telemetry frame.
struct MobilityUpdatePacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
    Vec3 position;
    Vec3 steering;
    std::vector<Vec3> waypoints;

    static constexpr std::size_t kWireSize = 1000;
    static constexpr std::size_t kMaxWaypoints = (kWireSize - 58) / 24;
};

// Stigmergic flood: carries only the prediction results. Each forwarder
// stamps its current and predicted position and multiplies the path score.
struct PathScorePacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
    Vec3 forwarder_position;
    Vec3 forwarder_predicted_position;
    double score = 1.0;
    std::uint16_t hop_count = 0;

    static constexpr std::size_t kWireSize = 67;
};

// Application payload routed hop by hop. The body is opaque; only its size
// matters for airtime.
struct DataPacket {
    NodeId origin = 0;
    std::uint32_t seq = 0;
    NodeId dst = 0;
    NodeId link_to = 0; // link-layer next hop
    std::uint16_t ttl = 32;
    double originated_at = 0.0;
    bool counted = true; // excluded from PDR when originated during warm-up
    std::uint32_t size_bytes = 1460;
};

using Packet =
    std::variant<HelloPacket, TcPacket, OgmPacket, MobilityUpdatePacket, PathScorePacket,
                 DataPacket>;

PacketType type_of(const Packet& p);
const char* type_name(PacketType t);
NodeId origin_of(const Packet& p);
std::uint32_t seq_of(const Packet& p);

// Wire size in bytes; drives channel airtime and control-byte accounting.
std::size_t wire_size(const Packet& p);

// Fixed-width big-endian serialization of the control packets (data
// payloads are opaque and are not serialized). Round-trips exactly.
std::vector<std::uint8_t> serialize(const Packet& p);
Packet deserialize(std::span<const std::uint8_t> bytes);

} // namespace manetsim
