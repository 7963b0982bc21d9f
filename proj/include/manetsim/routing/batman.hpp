#pragma once

#include "manetsim/routing/path_score.hpp"
#include "manetsim/routing/protocol.hpp"

#include <map>
#include <set>

namespace manetsim {

// Distance-vector-free proactive protocol: every node periodically floods
// an originator message; receivers keep per-neighbor reception windows and
// route toward an origin via the neighbor that delivered the most distinct
// sequence numbers. A node rebroadcasts an OGM only when it arrived via the
// current best next hop toward its origin.
class BatmanProtocol : public Protocol {
public:
    BatmanProtocol(NodeEnv& env, const ProtocolParams& params);

    void start() override;
    void on_packet(const Packet& p, NodeId from) override;
    std::optional<NodeId> next_hop(NodeId dest) override;
    std::map<NodeId, RouteEntry> routing_table() override;
    const char* name() const override { return "batman"; }

    const OriginatorWindows& windows() const { return windows_; }

private:
    void ogm_tick();

    ProtocolParams params_;
    std::uint32_t ogm_seq_ = 0;
    OriginatorWindows windows_;
    std::set<std::pair<NodeId, std::uint32_t>> rebroadcast_done_;
};

// Stigmergic variant: the periodic floods are PathScorePackets instead of
// plain OGMs. Each forwarder updates the packet with its own current and
// predicted position and multiplies the path score; next hops are chosen by
// the highest mean score in the window, so a single received packet already
// carries the quality of its whole travelled path.
class BatmobileProtocol : public Protocol {
public:
    BatmobileProtocol(NodeEnv& env, const ProtocolParams& params);

    void start() override;
    void on_packet(const Packet& p, NodeId from) override;
    std::optional<NodeId> next_hop(NodeId dest) override;
    std::map<NodeId, RouteEntry> routing_table() override;
    const char* name() const override { return "batmobile"; }

    const OriginatorWindows& windows() const { return windows_; }

private:
    void score_tick();
    Vec3 own_predicted_position() const;

    ProtocolParams params_;
    std::uint32_t score_seq_ = 0;
    OriginatorWindows windows_;
    std::set<std::pair<NodeId, std::uint32_t>> rebroadcast_done_;
};

} // namespace manetsim
