#include "manetsim/routing/olsr.hpp"

#include "manetsim/location/prediction.hpp"
#include "manetsim/routing/shortest_path.hpp"

namespace manetsim {

OlsrProtocol::OlsrProtocol(NodeEnv& env, const ProtocolParams& params)
    : Protocol(env), params_(params) {}

void OlsrProtocol::start() {
    hello_tick();
    tc_tick();
}

void OlsrProtocol::hello_tick() {
    HelloPacket hello{env_.self(), hello_seq_++, current_neighbors()};
    env_.transmit(hello);
    env_.kernel().schedule_in(params_.hello_interval + env_.timer_jitter(),
                              [this] { hello_tick(); });
}

void OlsrProtocol::tc_tick() {
    TcPacket tc{env_.self(), tc_seq_++, {}};
    for (NodeId n : current_neighbors())
        tc.links.emplace_back(env_.self(), n);
    env_.transmit(tc);
    env_.kernel().schedule_in(params_.tc_interval + env_.timer_jitter(), [this] { tc_tick(); });
}

void OlsrProtocol::on_packet(const Packet& p, NodeId from) {
    const double now = env_.kernel().now();
    if (std::holds_alternative<HelloPacket>(p))
        neighbor_last_heard_[from] = now;
    if (const auto* tc = std::get_if<TcPacket>(&p)) {
        if (tc->origin == env_.self())
            return;
        for (const auto& [a, b] : tc->links)
            if (a != b)
                learned_links_.refresh(a, b, now);
        auto [it, inserted] = tc_seen_.try_emplace(tc->origin, tc->seq);
        if (inserted || tc->seq > it->second) {
            it->second = tc->seq;
            env_.transmit(*tc);
        }
    }
}

std::vector<NodeId> OlsrProtocol::current_neighbors() const {
    const double cutoff = env_.kernel().now() - neighbor_hold();
    std::vector<NodeId> out;
    for (const auto& [node, heard] : neighbor_last_heard_)
        if (heard >= cutoff)
            out.push_back(node);
    return out;
}

std::vector<Link> OlsrProtocol::current_links() const {
    const double now = env_.kernel().now();
    LinkMap view = learned_links_;
    view.expire_before(now - link_hold());
    for (NodeId n : current_neighbors())
        view.refresh(env_.self(), n, now);
    return view.links();
}

std::optional<NodeId> OlsrProtocol::next_hop(NodeId dest) {
    return shortest_path_first_hop(env_.self(), dest, current_links());
}

std::map<NodeId, RouteEntry> OlsrProtocol::routing_table() {
    std::map<NodeId, RouteEntry> table;
    const auto links = current_links();
    std::map<NodeId, bool> nodes;
    for (const Link& l : links) {
        nodes[l.a] = true;
        nodes[l.b] = true;
    }
    for (const auto& [node, ignored] : nodes) {
        if (node == env_.self())
            continue;
        if (auto hop = shortest_path_first_hop(env_.self(), node, links))
            table[node] = {*hop, double(*shortest_path_hops(env_.self(), node, links))};
    }
    return table;
}

MaOlsrProtocol::MaOlsrProtocol(NodeEnv& env, const ProtocolParams& params)
    : OlsrProtocol(env, params) {}

void MaOlsrProtocol::start() {
    OlsrProtocol::start();
    telemetry_tick();
}

void MaOlsrProtocol::telemetry_tick() {
    MobilityUpdatePacket update{env_.self(), telemetry_seq_++, env_.measured_position(),
                                env_.own_steering(), env_.own_waypoints()};
    env_.transmit(update);
    env_.kernel().schedule_in(params_.telemetry_interval + env_.timer_jitter(),
                              [this] { telemetry_tick(); });
}

void MaOlsrProtocol::on_packet(const Packet& p, NodeId from) {
    OlsrProtocol::on_packet(p, from);
    if (const auto* update = std::get_if<MobilityUpdatePacket>(&p)) {
        if (update->origin == env_.self())
            return;
        auto [it, inserted] = update_seen_.try_emplace(update->origin, update->seq);
        if (!inserted && update->seq <= it->second)
            return;
        it->second = update->seq;
        env_.location_table().record({update->origin, env_.kernel().now(), update->position,
                                      update->steering, update->waypoints});
        env_.transmit(*update);
    }
}

std::optional<NodeId> MaOlsrProtocol::predictive_next_hop(NodeId dest) {
    LinkMap view;
    const double now = env_.kernel().now();
    for (const Link& l : current_links())
        view.refresh(l.a, l.b, now);
    return find_best_neighbor(env_.self(), dest, view, env_.assumed_channel(),
                              env_.location_table(), env_.prediction_horizon());
}

std::optional<NodeId> MaOlsrProtocol::next_hop(NodeId dest) {
    if (auto hop = predictive_next_hop(dest))
        return hop;
    return OlsrProtocol::next_hop(dest);
}

std::map<NodeId, RouteEntry> MaOlsrProtocol::routing_table() {
    std::map<NodeId, RouteEntry> table = OlsrProtocol::routing_table();
    for (auto it = table.begin(); it != table.end();) {
        if (auto hop = next_hop(it->first)) {
            it->second.next_hop = *hop;
            ++it;
        } else {
            it = table.erase(it);
        }
    }
    return table;
}

} // namespace manetsim
