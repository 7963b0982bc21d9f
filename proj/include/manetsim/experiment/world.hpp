#pragma once

#include "manetsim/channel/medium.hpp"
#include "manetsim/experiment/scenario_config.hpp"
#include "manetsim/experiment/stats.hpp"
#include "manetsim/location/location_table.hpp"
#include "manetsim/mobility/steering.hpp"
#include "manetsim/mobility/trace.hpp"
#include "manetsim/routing/protocol.hpp"
#include "manetsim/sim/kernel.hpp"

#include <iosfwd>
#include <memory>
#include <set>
#include <vector>

namespace manetsim {

// One simulation run: the mission area, the swarm (or a mobility trace),
// the broadcast medium, one routing protocol instance per node, CBR traffic
// from a randomly selected agent to the static base station, and the
// statistics sink. Fully deterministic for a given (config, seed) pair.
class World {
public:
    World(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* packet_dump = nullptr);
    ~World();

    World(const World&) = delete;
    World& operator=(const World&) = delete;

    void run_to(double t) { kernel_.run_until(t); }
    void run_all() { kernel_.run_until(cfg_.duration); }

    const RunStats& stats() const { return stats_; }
    Kernel& kernel() { return kernel_; }

    NodeId base_station() const { return bs_id_; }
    NodeId source() const { return source_id_; }
    std::size_t node_count() const;
    std::vector<NodeId> node_ids() const;

    Vec3 true_position(NodeId id) const;
    Vec3 measured_position(NodeId id) const;
    Protocol& protocol_of(NodeId id);
    const LocationTable& table_of(NodeId id) const;

    // Injects one application packet at `src` addressed to `dst`.
    void originate_data(NodeId src, NodeId dst, std::uint32_t seq, bool counted);

private:
    struct NodeState;

    NodeState& node(NodeId id);
    const NodeState& node(NodeId id) const;

    void build_agents();
    void build_from_trace();
    void finish_setup();
    void mobility_tick();
    void refresh_measurements_and_entries();
    void cbr_tick(std::uint32_t seq);
    void transmit(NodeState& sender, Packet p);
    void deliver(NodeId receiver, const std::shared_ptr<const Packet>& p, NodeId from);
    void forward_data(NodeState& at, DataPacket d);
    void dump_delivery(const Packet& p, NodeId from, NodeId to);

    ScenarioConfig cfg_;
    Kernel kernel_;
    RandomStream mobility_rng_;
    RandomStream channel_rng_;
    RandomStream traffic_rng_;
    RandomStream jitter_rng_;
    RandomStream gnss_rng_;
    MissionArea area_;
    ChannelModel assumed_channel_;
    Medium medium_;
    MobilityTrace trace_;
    bool trace_mode_ = false;

    std::vector<std::unique_ptr<NodeState>> nodes_; // sorted by id
    std::vector<NodePose> poses_;
    NodeId bs_id_ = 0;
    NodeId source_id_ = 0;

    RunStats stats_;
    std::set<std::pair<NodeId, std::uint32_t>> delivered_; // (origin, seq)
    std::ostream* dump_ = nullptr;
};

// Builds the scenario, runs it to completion and returns the collected
// statistics.
RunStats run_scenario(const ScenarioConfig& cfg, std::uint64_t seed,
                      std::ostream* packet_dump = nullptr);

} // namespace manetsim
