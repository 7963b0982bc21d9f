#pragma once

#include "manetsim/channel/channel_model.hpp"
#include "manetsim/location/location_table.hpp"
#include "manetsim/routing/link_map.hpp"

#include <optional>
#include <span>

namespace manetsim {

// First hop of a minimum-hop path from `self` to `dest` over the given
// undirected links, or nullopt if no path exists. Ties are broken
// deterministically by expanding neighbors in ascending node id.
std::optional<NodeId> shortest_path_first_hop(NodeId self, NodeId dest,
                                              std::span<const Link> links);

// Hop count of the shortest path, or nullopt when unreachable.
std::optional<int> shortest_path_hops(NodeId self, NodeId dest, std::span<const Link> links);

// Predictive geo-based forwarder selection: derives the maximum link reach
// from the assumed channel model, keeps only links whose predicted
// inter-endpoint distance at `horizon` stays below it, and returns the
// first hop of a minimum-hop path over the surviving links. Links with an
// endpoint missing from the location table cannot be predicted and are
// dropped.
std::optional<NodeId> find_best_neighbor(NodeId self, NodeId dest, const LinkMap& link_map,
                                         const ChannelModel& assumed_channel,
                                         const LocationTable& table, double horizon);

} // namespace manetsim
