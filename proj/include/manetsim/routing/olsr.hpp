#pragma once

#include "manetsim/routing/link_map.hpp"
#include "manetsim/routing/protocol.hpp"

#include <map>

namespace manetsim {

// Link-state protocol without MPR selection: periodic HELLOs for neighbor
// sensing and network-wide TC floods (every node forwards a TC once). The
// link map is the union of own links and TC-learned links.
class OlsrProtocol : public Protocol {
public:
    OlsrProtocol(NodeEnv& env, const ProtocolParams& params);

    void start() override;
    void on_packet(const Packet& p, NodeId from) override;
    std::optional<NodeId> next_hop(NodeId dest) override;
    std::map<NodeId, RouteEntry> routing_table() override;
    const char* name() const override { return "olsr"; }

    // Neighbors heard within two HELLO intervals.
    std::vector<NodeId> current_neighbors() const;
    // Unexpired topology view (own links plus learned links).
    std::vector<Link> current_links() const;

protected:
    ProtocolParams params_;

private:
    void hello_tick();
    void tc_tick();
    double neighbor_hold() const { return 2.0 * params_.hello_interval; }
    double link_hold() const { return 3.0; }

    std::uint32_t hello_seq_ = 0;
    std::uint32_t tc_seq_ = 0;
    std::map<NodeId, double> neighbor_last_heard_;
    LinkMap learned_links_;
    std::map<NodeId, std::uint32_t> tc_seen_; // flood duplicate suppression
};

// OLSR with predictive path planning: floods MobilityUpdatePackets so every
// node can predict the whole network, and picks forwarders over links that
// are still reachable at the prediction horizon. Falls back to the plain
// shortest-path hop when no predicted path exists.
class MaOlsrProtocol : public OlsrProtocol {
public:
    MaOlsrProtocol(NodeEnv& env, const ProtocolParams& params);

    void start() override;
    void on_packet(const Packet& p, NodeId from) override;
    std::optional<NodeId> next_hop(NodeId dest) override;
    std::map<NodeId, RouteEntry> routing_table() override;
    const char* name() const override { return "ma-olsr"; }

    // Predictive choice only, no fallback; exposed for analysis.
    std::optional<NodeId> predictive_next_hop(NodeId dest);

private:
    void telemetry_tick();

    std::uint32_t telemetry_seq_ = 0;
    std::map<NodeId, std::uint32_t> update_seen_;
};

} // namespace manetsim
