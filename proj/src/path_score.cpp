#include "manetsim/routing/path_score.hpp"

#include <algorithm>
#include <stdexcept>

namespace manetsim {

double path_score_update(double s_in, double d_now, double d_pred, double d_max, double w_dist,
                         double w_pred) {
    if (d_max <= 0.0)
        throw std::invalid_argument("path_score_update: d_max must be positive");
    if (s_in < 0.0 || s_in > 1.0)
        throw std::invalid_argument("path_score_update: score must lie in [0,1]");
    const double factor =
        std::clamp(w_dist * (1.0 - d_now / d_max) + w_pred * (1.0 - d_pred / d_max), 0.0, 1.0);
    return s_in * factor;
}

bool OriginatorWindows::record(NodeId origin, NodeId via, std::uint32_t seq, double score) {
    auto& po = origins_[origin];
    auto& entries = po.via[via];
    for (const Entry& e : entries)
        if (e.seq == seq)
            return false;
    entries.push_back({seq, score});
    if (entries.size() > window_)
        entries.pop_front();
    po.latest_seq = std::max(po.latest_seq, seq);
    purge(po);
    return true;
}

void OriginatorWindows::purge(PerOrigin& po) {
    const std::uint32_t floor =
        po.latest_seq >= window_ ? po.latest_seq - static_cast<std::uint32_t>(window_) + 1 : 0;
    for (auto it = po.via.begin(); it != po.via.end();) {
        auto& entries = it->second;
        while (!entries.empty() && entries.front().seq < floor)
            entries.pop_front();
        it = entries.empty() ? po.via.erase(it) : std::next(it);
    }
}

bool OriginatorWindows::seen(NodeId origin, NodeId via, std::uint32_t seq) const {
    auto oit = origins_.find(origin);
    if (oit == origins_.end())
        return false;
    auto vit = oit->second.via.find(via);
    if (vit == oit->second.via.end())
        return false;
    for (const Entry& e : vit->second)
        if (e.seq == seq)
            return true;
    return false;
}

std::optional<NodeId> OriginatorWindows::best_by_count(NodeId origin) const {
    auto oit = origins_.find(origin);
    if (oit == origins_.end())
        return std::nullopt;
    std::optional<NodeId> best;
    std::size_t best_count = 0;
    for (const auto& [via, entries] : oit->second.via) {
        if (entries.empty())
            continue;
        if (!best || entries.size() > best_count) {
            best = via;
            best_count = entries.size();
        }
    }
    return best;
}

std::optional<NodeId> OriginatorWindows::best_by_mean_score(NodeId origin) const {
    auto oit = origins_.find(origin);
    if (oit == origins_.end())
        return std::nullopt;
    std::optional<NodeId> best;
    double best_score = 0.0;
    for (const auto& [via, entries] : oit->second.via) {
        if (entries.empty())
            continue;
        double sum = 0.0;
        for (const Entry& e : entries)
            sum += e.score;
        const double mean = sum / static_cast<double>(entries.size());
        if (!best || mean > best_score) {
            best = via;
            best_score = mean;
        }
    }
    return best;
}

std::vector<NodeId> OriginatorWindows::known_origins() const {
    std::vector<NodeId> out;
    out.reserve(origins_.size());
    for (const auto& [origin, po] : origins_)
        out.push_back(origin);
    return out;
}

std::size_t OriginatorWindows::count(NodeId origin, NodeId via) const {
    auto oit = origins_.find(origin);
    if (oit == origins_.end())
        return 0;
    auto vit = oit->second.via.find(via);
    return vit == oit->second.via.end() ? 0 : vit->second.size();
}

double OriginatorWindows::mean_score(NodeId origin, NodeId via) const {
    auto oit = origins_.find(origin);
    if (oit == origins_.end())
        return 0.0;
    auto vit = oit->second.via.find(via);
    if (vit == oit->second.via.end() || vit->second.empty())
        return 0.0;
    double sum = 0.0;
    for (const Entry& e : vit->second)
        sum += e.score;
    return sum / static_cast<double>(vit->second.size());
}

} // namespace manetsim
