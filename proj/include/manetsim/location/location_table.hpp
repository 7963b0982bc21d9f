#pragma once

#include "manetsim/types.hpp"
#include "manetsim/vec3.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace manetsim {

// One node's mobility knowledge about a peer at a point in time: the
// measured position, the current steering vector and the planned waypoints.
struct MobilityEntry {
    NodeId node = 0;
    double timestamp = 0.0;
    Vec3 position;
    Vec3 steering;
    std::vector<Vec3> waypoints;
};

// Per-node location service: a bounded, time-ordered history of mobility
// entries for every known node, newest last. Acts as the mediator between
// mobility control and the routing layer.
class LocationTable {
public:
    explicit LocationTable(std::size_t history_size = 5) : history_size_(history_size) {}

    // Appends the entry to its node's history. Entries that do not advance
    // the node's newest timestamp are stale duplicates and are discarded;
    // the oldest entry is evicted once the history is full.
    void record(const MobilityEntry& entry) {
        auto& buffer = histories_[entry.node];
        if (!buffer.empty() && entry.timestamp <= buffer.back().timestamp)
            return;
        buffer.push_back(entry);
        if (buffer.size() > history_size_)
            buffer.pop_front();
    }

    bool contains(NodeId node) const { return histories_.count(node) != 0; }

    const std::deque<MobilityEntry>& history(NodeId node) const {
        auto it = histories_.find(node);
        if (it == histories_.end())
            throw std::out_of_range("LocationTable: unknown node " + std::to_string(node));
        return it->second;
    }

    const MobilityEntry& newest(NodeId node) const { return history(node).back(); }

    std::vector<NodeId> known_nodes() const {
        std::vector<NodeId> ids;
        ids.reserve(histories_.size());
        for (const auto& [node, buffer] : histories_)
            ids.push_back(node);
        return ids;
    }

    std::size_t history_size() const { return history_size_; }

private:
    std::size_t history_size_;
    std::map<NodeId, std::deque<MobilityEntry>> histories_;
};

} // namespace manetsim
