#include "manetsim/routing/shortest_path.hpp"

#include "manetsim/location/prediction.hpp"

#include <deque>
#include <map>

namespace manetsim {

namespace {

// Sorted adjacency per node; ascending ids give deterministic tie-breaks.
std::map<NodeId, std::vector<NodeId>> adjacency(std::span<const Link> links) {
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const Link& l : links) {
        adj[l.a].push_back(l.b);
        adj[l.b].push_back(l.a);
    }
    for (auto& [node, nbrs] : adj)
        std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

struct BfsResult {
    bool reached = false;
    int hops = 0;
    NodeId first_hop = 0;
};

BfsResult bfs(NodeId self, NodeId dest, std::span<const Link> links) {
    if (self == dest)
        return {true, 0, self};
    const auto adj = adjacency(links);
    if (!adj.count(self) || !adj.count(dest))
        return {};
    std::map<NodeId, NodeId> parent;
    std::map<NodeId, int> depth;
    std::deque<NodeId> queue{self};
    depth[self] = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        if (u == dest)
            break;
        auto it = adj.find(u);
        if (it == adj.end())
            continue;
        for (NodeId v : it->second) {
            if (depth.count(v))
                continue;
            depth[v] = depth[u] + 1;
            parent[v] = u;
            queue.push_back(v);
        }
    }
    if (!depth.count(dest))
        return {};
    NodeId hop = dest;
    while (parent.at(hop) != self)
        hop = parent.at(hop);
    return {true, depth[dest], hop};
}

} // namespace

std::optional<NodeId> shortest_path_first_hop(NodeId self, NodeId dest,
                                              std::span<const Link> links) {
    const BfsResult r = bfs(self, dest, links);
    if (!r.reached || r.hops == 0)
        return std::nullopt;
    return r.first_hop;
}

std::optional<int> shortest_path_hops(NodeId self, NodeId dest, std::span<const Link> links) {
    const BfsResult r = bfs(self, dest, links);
    if (!r.reached)
        return std::nullopt;
    return r.hops;
}

std::optional<NodeId> find_best_neighbor(NodeId self, NodeId dest, const LinkMap& link_map,
                                         const ChannelModel& assumed_channel,
                                         const LocationTable& table, double horizon) {
    if (link_map.empty())
        return std::nullopt;
    const double d_max = assumed_channel.max_distance();
    std::vector<Link> future_links;
    link_map.for_each([&](const Link& link, double) {
        if (!table.contains(link.a) || !table.contains(link.b))
            return;
        if (predicted_distance(table, link.a, link.b, horizon) < d_max)
            future_links.push_back(link);
    });
    return shortest_path_first_hop(self, dest, future_links);
}

} // namespace manetsim
