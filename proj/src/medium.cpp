#include "manetsim/channel/medium.hpp"

#include <stdexcept>

namespace manetsim {

std::vector<Delivery> Medium::broadcast(const Transmission& tx,
                                        std::span<const NodePose> poses) const {
    const NodePose* sender = nullptr;
    for (const auto& p : poses)
        if (p.id == tx.sender) {
            sender = &p;
            break;
        }
    if (!sender)
        throw std::invalid_argument("Medium::broadcast: sender position unknown");

    std::vector<Delivery> deliveries;
    const double airtime = tx.airtime();
    for (const auto& p : poses) {
        if (p.id == tx.sender)
            continue;
        const double d = distance(p.pos, sender->pos);
        if (!model_.reception_success(d, rng_))
            continue;
        deliveries.push_back({p.id, tx.start + airtime + d / kSpeedOfLight});
    }
    return deliveries;
}

} // namespace manetsim
