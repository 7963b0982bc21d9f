#pragma once

#include "manetsim/channel/channel_model.hpp"
#include "manetsim/types.hpp"
#include "manetsim/vec3.hpp"

#include <span>
#include <vector>

namespace manetsim {

// One frame on the air.
struct Transmission {
    NodeId sender = 0;
    double payload_bytes = 0.0;
    SimTime start = 0.0;
    double bitrate = 54e6; // bit/s

    double airtime() const { return payload_bytes * 8.0 / bitrate; }
};

struct NodePose {
    NodeId id;
    Vec3 pos;
};

struct Delivery {
    NodeId receiver;
    SimTime at;
};

// Interference-free broadcast medium: every frame is a channel-level
// broadcast; unicast is addressing at the routing layer. Reception is
// evaluated per receiver in ascending node-id order so fading draws consume
// the channel stream deterministically.
class Medium {
public:
    Medium(ChannelModel model, RandomStream& channel_stream)
        : model_(model), rng_(channel_stream) {}

    // Evaluates reception for every node other than the sender. Successful
    // receivers get the frame at start + airtime + propagation delay.
    // `poses` must be sorted by node id and contain the sender.
    std::vector<Delivery> broadcast(const Transmission& tx, std::span<const NodePose> poses) const;

    const ChannelModel& model() const { return model_; }

private:
    ChannelModel model_;
    RandomStream& rng_;
};

} // namespace manetsim
