#include "manetsim/experiment/world.hpp"

#include "manetsim/location/prediction.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace manetsim {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

// Per-node state: physical pose, own mobility knowledge and the routing
// protocol instance. Implements the environment surface protocols run
// against.
struct World::NodeState final : NodeEnv {
    NodeState(World& world, NodeId node_id, bool agent)
        : world_(world), id(node_id), is_agent(agent), table(world.cfg_.nh) {}

    // NodeEnv
    NodeId self() const override { return id; }
    Kernel& kernel() override { return world_.kernel_; }
    void transmit(const Packet& p) override { world_.transmit(*this, Packet(p)); }
    Vec3 measured_position() const override { return measured_pos; }
    Vec3 own_steering() const override { return steering_vec; }
    std::vector<Vec3> own_waypoints() const override {
        return {waypoints.targets.begin(), waypoints.targets.end()};
    }
    LocationTable& location_table() override { return table; }
    const ChannelModel& assumed_channel() const override { return world_.assumed_channel_; }
    double prediction_horizon() const override { return world_.cfg_.horizon(); }
    double timer_jitter() override {
        return world_.cfg_.jitter > 0.0 ? world_.jitter_rng_.uniform(0.0, world_.cfg_.jitter)
                                        : 0.0;
    }

    World& world_;
    NodeId id;
    bool is_agent;
    Vec3 true_pos;
    Vec3 measured_pos;
    Vec3 steering_vec;
    WaypointQueue waypoints;
    LocationTable table;
    std::unique_ptr<Protocol> protocol;
};

namespace {

ScenarioConfig checked(ScenarioConfig cfg) {
    cfg.validate();
    return cfg;
}

} // namespace

World::World(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* packet_dump)
    : cfg_(checked(cfg)),
      mobility_rng_(seed, static_cast<std::uint64_t>(StreamId::Mobility)),
      channel_rng_(seed, static_cast<std::uint64_t>(StreamId::Channel)),
      traffic_rng_(seed, static_cast<std::uint64_t>(StreamId::Traffic)),
      jitter_rng_(seed, static_cast<std::uint64_t>(StreamId::Jitter)),
      gnss_rng_(seed, static_cast<std::uint64_t>(StreamId::Positioning)),
      area_(cfg.area_x, cfg.area_y, cfg.area_z),
      assumed_channel_(cfg.assumed_channel()),
      medium_(cfg.medium_channel(), channel_rng_),
      dump_(packet_dump) {
    if (cfg_.trace_file.empty())
        build_agents();
    else
        build_from_trace();
    finish_setup();
}

World::~World() = default;

void World::build_agents() {
    for (int i = 0; i < cfg_.agents; ++i) {
        auto n = std::make_unique<NodeState>(*this, static_cast<NodeId>(i), true);
        n->true_pos = area_.random_point(mobility_rng_);
        n->waypoints.arrival_radius = cfg_.arrival_radius;
        n->waypoints.lookahead = static_cast<std::size_t>(cfg_.lookahead);
        n->waypoints.replenish(area_, mobility_rng_);
        nodes_.push_back(std::move(n));
    }
    bs_id_ = static_cast<NodeId>(cfg_.agents);
}

void World::build_from_trace() {
    trace_ = MobilityTrace::load_file(cfg_.trace_file);
    trace_mode_ = true;
    const auto ids = trace_.node_ids();
    for (NodeId id : ids) {
        auto n = std::make_unique<NodeState>(*this, id, true);
        n->true_pos = trace_.position_at(id, 0.0);
        nodes_.push_back(std::move(n));
    }
    bs_id_ = ids.back() + 1;
}

void World::finish_setup() {
    auto bs = std::make_unique<NodeState>(*this, bs_id_, false);
    bs->true_pos = {cfg_.bs_x, cfg_.bs_y, cfg_.bs_z};
    nodes_.push_back(std::move(bs));

    poses_.resize(nodes_.size());
    refresh_measurements_and_entries();

    // Mobility ticks are scheduled ahead of the protocol timers so that at
    // equal times a tick always runs first and broadcasts carry
    // current-tick data.
    for (std::uint64_t k = 1; k * cfg_.dt_u <= cfg_.duration + 1e-9; ++k)
        kernel_.schedule(static_cast<double>(k) * cfg_.dt_u, [this] { mobility_tick(); });

    for (auto& n : nodes_) {
        n->protocol = make_protocol(cfg_.protocol_kind(), *n, cfg_.protocol_params());
        n->protocol->start();
    }

    const auto agent_count = nodes_.size() - 1;
    source_id_ = nodes_[traffic_rng_.uniform_index(agent_count)]->id;
    const double cbr_interval = cfg_.cbr_packet * 8.0 / cfg_.cbr_bitrate;
    if (cbr_interval <= cfg_.duration)
        kernel_.schedule(cbr_interval, [this] { cbr_tick(1); });
}

std::size_t World::node_count() const { return nodes_.size(); }

std::vector<NodeId> World::node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(nodes_.size());
    for (const auto& n : nodes_)
        ids.push_back(n->id);
    return ids;
}

World::NodeState& World::node(NodeId id) {
    for (auto& n : nodes_)
        if (n->id == id)
            return *n;
    throw std::out_of_range("World: unknown node " + std::to_string(id));
}

const World::NodeState& World::node(NodeId id) const {
    return const_cast<World*>(this)->node(id);
}

Vec3 World::true_position(NodeId id) const { return node(id).true_pos; }
Vec3 World::measured_position(NodeId id) const { return node(id).measured_pos; }
Protocol& World::protocol_of(NodeId id) { return *node(id).protocol; }
const LocationTable& World::table_of(NodeId id) const { return node(id).table; }

void World::mobility_tick() {
    const double t = kernel_.now();
    if (trace_mode_) {
        for (auto& n : nodes_) {
            if (!n->is_agent)
                continue;
            n->true_pos = trace_.position_at(n->id, t);
            n->steering_vec = trace_.velocity_at(n->id, t);
        }
    } else {
        // Steer against the pre-tick snapshot so update order is irrelevant.
        std::vector<Vec3> snapshot(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            snapshot[i] = nodes_[i]->true_pos;
        const double v_max = cfg_.speed_mps();
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            auto& n = *nodes_[i];
            if (!n.is_agent)
                continue;
            std::vector<Vec3> others;
            others.reserve(nodes_.size() - 1);
            for (std::size_t j = 0; j < nodes_.size(); ++j)
                if (j != i)
                    others.push_back(snapshot[j]);
            const SteeringOutput explore = controlled_waypoint_step(
                n.true_pos, n.waypoints, v_max, area_, mobility_rng_, cfg_.exploration_weight);
            const SteeringOutput avoid = collision_avoidance_step(
                n.true_pos, others, cfg_.min_distance, v_max, cfg_.collision_weight);
            const SteeringOutput outputs[] = {explore, avoid};
            n.steering_vec = (explore.weight > 0.0 || avoid.weight > 0.0)
                                 ? combine_steerings(outputs)
                                 : Vec3{};
            n.true_pos = locomotion_apply(n.true_pos, n.steering_vec, cfg_.dt_u, v_max, area_);
        }
    }
    refresh_measurements_and_entries();
}

void World::refresh_measurements_and_entries() {
    const double t = kernel_.now();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        auto& n = *nodes_[i];
        n.measured_pos = apply_gnss_noise(n.true_pos, cfg_.e_max, gnss_rng_);
        n.table.record({n.id, t, n.measured_pos, n.steering_vec, n.own_waypoints()});
        poses_[i] = {n.id, n.true_pos};
    }
}

void World::cbr_tick(std::uint32_t seq) {
    const double t = kernel_.now();
    DataPacket d;
    d.origin = source_id_;
    d.seq = seq;
    d.dst = bs_id_;
    d.originated_at = t;
    d.counted = t > cfg_.warmup;
    d.size_bytes = static_cast<std::uint32_t>(cfg_.cbr_packet);
    if (d.counted)
        ++stats_.sent;
    forward_data(node(source_id_), d);
    const double cbr_interval = cfg_.cbr_packet * 8.0 / cfg_.cbr_bitrate;
    const double next = t + cbr_interval;
    if (next <= cfg_.duration)
        kernel_.schedule(next, [this, seq] { cbr_tick(seq + 1); });
}

void World::originate_data(NodeId src, NodeId dst, std::uint32_t seq, bool counted) {
    DataPacket d;
    d.origin = src;
    d.seq = seq;
    d.dst = dst;
    d.originated_at = kernel_.now();
    d.counted = counted;
    d.size_bytes = static_cast<std::uint32_t>(cfg_.cbr_packet);
    if (counted)
        ++stats_.sent;
    forward_data(node(src), d);
}

void World::forward_data(NodeState& at, DataPacket d) {
    if (d.ttl == 0)
        return; // hop budget exhausted
    const auto hop = at.protocol->next_hop(d.dst);
    if (!hop || *hop == at.id)
        return; // no route
    d.link_to = *hop;
    --d.ttl;
    transmit(at, Packet(d));
}

void World::transmit(NodeState& sender, Packet p) {
    std::size_t bytes = wire_size(p);
    if (std::holds_alternative<MobilityUpdatePacket>(p))
        bytes = static_cast<std::size_t>(cfg_.telemetry_size);
    if (!std::holds_alternative<DataPacket>(p))
        stats_.control_bytes += bytes;

    Transmission tx;
    tx.sender = sender.id;
    tx.payload_bytes = static_cast<double>(bytes);
    tx.start = kernel_.now();
    tx.bitrate = cfg_.mac_bitrate;

    const auto deliveries = medium_.broadcast(tx, poses_);
    if (deliveries.empty())
        return;
    auto shared = std::make_shared<const Packet>(std::move(p));
    for (const Delivery& del : deliveries)
        kernel_.schedule(del.at, [this, shared, r = del.receiver, from = sender.id] {
            deliver(r, shared, from);
        });
}

void World::deliver(NodeId receiver, const std::shared_ptr<const Packet>& p, NodeId from) {
    if (dump_)
        dump_delivery(*p, from, receiver);
    if (const auto* d = std::get_if<DataPacket>(p.get())) {
        if (d->link_to != receiver)
            return; // overheard unicast addressed elsewhere
        if (receiver == d->dst) {
            if (d->counted && delivered_.emplace(d->origin, d->seq).second) {
                ++stats_.delivered;
                if (cfg_.record_latency)
                    stats_.latencies.push_back(kernel_.now() - d->originated_at);
            }
            return;
        }
        forward_data(node(receiver), *d);
        return;
    }
    node(receiver).protocol->on_packet(*p, from);
}

void World::dump_delivery(const Packet& p, NodeId from, NodeId to) {
    std::string line;
    append_double(line, kernel_.now());
    line += ',';
    line += type_name(type_of(p));
    line += ',';
    line += std::to_string(origin_of(p));
    line += ',';
    line += std::to_string(from);
    line += ',';
    line += std::to_string(to);
    line += ',';
    line += std::to_string(seq_of(p));
    line += '\n';
    *dump_ << line;
}

RunStats run_scenario(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* packet_dump) {
    World world(cfg, seed, packet_dump);
    world.run_all();
    return world.stats();
}

} // namespace manetsim
