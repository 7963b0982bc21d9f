#pragma once

#include "manetsim/types.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace manetsim {

// Per-hop path score update. The link factor weighs how close the
// forwarder is now (d_now) and how close it is predicted to stay (d_pred)
// relative to the maximum link reach; the incoming score is multiplied by
// it, so scores only ever decrease along a path.
double path_score_update(double s_in, double d_now, double d_pred, double d_max,
                         double w_dist = 0.5, double w_pred = 0.5);

// Sliding reception windows per (origin, via-neighbor): the recently seen
// sequence numbers and, for score-based selection, the path score each one
// arrived with. Capacity is `window_size` distinct sequence numbers; on
// every insert, entries that fell behind the origin's newest sequence by a
// full window are purged, so silent neighbors age out.
class OriginatorWindows {
public:
    explicit OriginatorWindows(std::size_t window_size = 64) : window_(window_size) {}

    // Records one reception. Returns false for a duplicate
    // (origin, via, seq), which leaves the window unchanged.
    bool record(NodeId origin, NodeId via, std::uint32_t seq, double score = 0.0);

    bool seen(NodeId origin, NodeId via, std::uint32_t seq) const;

    // Neighbor with the highest count of distinct sequence numbers in the
    // window; ties break toward the lowest node id.
    std::optional<NodeId> best_by_count(NodeId origin) const;

    // Neighbor with the highest mean score over its window entries; ties
    // break toward the lowest node id.
    std::optional<NodeId> best_by_mean_score(NodeId origin) const;

    std::size_t count(NodeId origin, NodeId via) const;
    double mean_score(NodeId origin, NodeId via) const;
    bool knows(NodeId origin) const { return origins_.count(origin) != 0; }
    std::vector<NodeId> known_origins() const;

private:
    struct Entry {
        std::uint32_t seq;
        double score;
    };
    struct PerOrigin {
        std::uint32_t latest_seq = 0;
        std::map<NodeId, std::deque<Entry>> via;
    };

    void purge(PerOrigin& po);

    std::size_t window_;
    std::map<NodeId, PerOrigin> origins_;
};

} // namespace manetsim
