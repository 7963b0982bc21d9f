#pragma once

#include "manetsim/channel/channel_model.hpp"
#include "manetsim/location/location_table.hpp"
#include "manetsim/routing/packets.hpp"
#include "manetsim/sim/kernel.hpp"

#include <memory>
#include <optional>
#include <string>

namespace manetsim {

// Services a routing protocol needs from its host node. The simulation
// world implements this per node; tests can supply mocks.
class NodeEnv {
public:
    virtual ~NodeEnv() = default;

    virtual NodeId self() const = 0;
    virtual Kernel& kernel() = 0;

    // Broadcasts a control packet on the medium; the host accounts for the
    // wire bytes.
    virtual void transmit(const Packet& p) = 0;

    // Own mobility data as the node itself measures it.
    virtual Vec3 measured_position() const = 0;
    virtual Vec3 own_steering() const = 0;
    virtual std::vector<Vec3> own_waypoints() const = 0;

    // The node's location service.
    virtual LocationTable& location_table() = 0;

    // The channel conditions the node assumes when judging link reach (not
    // necessarily the medium's actual model).
    virtual const ChannelModel& assumed_channel() const = 0;
    virtual double prediction_horizon() const = 0;

    // Uniform broadcast jitter draw in seconds (0 when disabled).
    virtual double timer_jitter() = 0;
};

enum class ProtocolKind { Olsr, MaOlsr, Batman, Batmobile };

const char* protocol_name(ProtocolKind kind);
std::optional<ProtocolKind> parse_protocol(const std::string& name);

struct ProtocolParams {
    double hello_interval = 0.5;
    double tc_interval = 1.0;
    double ogm_interval = 0.5;
    double telemetry_interval = 0.25;
    std::size_t window = 64;
    double score_weight_dist = 0.5;
    double score_weight_pred = 0.5;
};

struct RouteEntry {
    NodeId next_hop;
    double metric;
};

class Protocol {
public:
    explicit Protocol(NodeEnv& env) : env_(env) {}
    virtual ~Protocol() = default;

    // Schedules the protocol's periodic broadcasts.
    virtual void start() = 0;

    // Handles a control packet received from direct neighbor `from`.
    virtual void on_packet(const Packet& p, NodeId from) = 0;

    // Forwarding decision for a destination, or nullopt to drop.
    virtual std::optional<NodeId> next_hop(NodeId dest) = 0;

    // Snapshot of the current routes to every known destination.
    virtual std::map<NodeId, RouteEntry> routing_table() = 0;

    virtual const char* name() const = 0;

protected:
    NodeEnv& env_;
};

std::unique_ptr<Protocol> make_protocol(ProtocolKind kind, NodeEnv& env,
                                        const ProtocolParams& params);

} // namespace manetsim
