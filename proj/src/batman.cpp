#include "manetsim/routing/batman.hpp"

#include "manetsim/location/prediction.hpp"

namespace manetsim {

BatmanProtocol::BatmanProtocol(NodeEnv& env, const ProtocolParams& params)
    : Protocol(env), params_(params), windows_(params.window) {}

void BatmanProtocol::start() { ogm_tick(); }

void BatmanProtocol::ogm_tick() {
    env_.transmit(OgmPacket{env_.self(), ogm_seq_++});
    env_.kernel().schedule_in(params_.ogm_interval + env_.timer_jitter(), [this] { ogm_tick(); });
}

void BatmanProtocol::on_packet(const Packet& p, NodeId from) {
    const auto* ogm = std::get_if<OgmPacket>(&p);
    if (!ogm || ogm->origin == env_.self())
        return;
    // A copy of a flood this node already forwarded is its own echo
    // bouncing back; counting it would rank the reverse path.
    if (rebroadcast_done_.count({ogm->origin, ogm->seq}))
        return;
    if (!windows_.record(ogm->origin, from, ogm->seq))
        return; // duplicate via this neighbor
    const auto best = windows_.best_by_count(ogm->origin);
    if (best && *best == from &&
        rebroadcast_done_.emplace(ogm->origin, ogm->seq).second)
        env_.transmit(*ogm);
}

std::optional<NodeId> BatmanProtocol::next_hop(NodeId dest) {
    return windows_.best_by_count(dest);
}

std::map<NodeId, RouteEntry> BatmanProtocol::routing_table() {
    std::map<NodeId, RouteEntry> table;
    for (NodeId origin : windows_.known_origins())
        if (auto hop = windows_.best_by_count(origin))
            table[origin] = {*hop, double(windows_.count(origin, *hop))};
    return table;
}

BatmobileProtocol::BatmobileProtocol(NodeEnv& env, const ProtocolParams& params)
    : Protocol(env), params_(params), windows_(params.window) {}

void BatmobileProtocol::start() { score_tick(); }

Vec3 BatmobileProtocol::own_predicted_position() const {
    const auto& table = const_cast<NodeEnv&>(env_).location_table();
    if (!table.contains(env_.self()))
        return env_.measured_position();
    return predict_position(table.history(env_.self()), env_.prediction_horizon());
}

void BatmobileProtocol::score_tick() {
    env_.transmit(PathScorePacket{env_.self(), score_seq_++, env_.measured_position(),
                                  own_predicted_position(), 1.0, 0});
    env_.kernel().schedule_in(params_.ogm_interval + env_.timer_jitter(),
                              [this] { score_tick(); });
}

void BatmobileProtocol::on_packet(const Packet& p, NodeId from) {
    const auto* psp = std::get_if<PathScorePacket>(&p);
    if (!psp || psp->origin == env_.self())
        return;
    if (rebroadcast_done_.count({psp->origin, psp->seq}))
        return; // own echo bouncing back
    if (windows_.seen(psp->origin, from, psp->seq))
        return;
    const double d_max = env_.assumed_channel().max_distance();
    const double d_now = distance(env_.measured_position(), psp->forwarder_position);
    const Vec3 predicted = own_predicted_position();
    const double d_pred = distance(predicted, psp->forwarder_predicted_position);
    const double score = path_score_update(psp->score, d_now, d_pred, d_max,
                                           params_.score_weight_dist, params_.score_weight_pred);
    windows_.record(psp->origin, from, psp->seq, score);
    const auto best = windows_.best_by_mean_score(psp->origin);
    if (best && *best == from &&
        rebroadcast_done_.emplace(psp->origin, psp->seq).second) {
        PathScorePacket forward{psp->origin,
                                psp->seq,
                                env_.measured_position(),
                                predicted,
                                score,
                                static_cast<std::uint16_t>(psp->hop_count + 1)};
        env_.transmit(forward);
    }
}

std::optional<NodeId> BatmobileProtocol::next_hop(NodeId dest) {
    return windows_.best_by_mean_score(dest);
}

std::map<NodeId, RouteEntry> BatmobileProtocol::routing_table() {
    std::map<NodeId, RouteEntry> table;
    for (NodeId origin : windows_.known_origins())
        if (auto hop = windows_.best_by_mean_score(origin))
            table[origin] = {*hop, windows_.mean_score(origin, *hop)};
    return table;
}

} // namespace manetsim
