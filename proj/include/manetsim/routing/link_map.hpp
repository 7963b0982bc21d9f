#pragma once

#include "manetsim/types.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace manetsim {

// Undirected link between two nodes, stored with the smaller id first so
// (a,b) and (b,a) are the same link.
struct Link {
    NodeId a;
    NodeId b;

    Link(NodeId x, NodeId y) : a(std::min(x, y)), b(std::max(x, y)) {
        if (x == y)
            throw std::invalid_argument("Link: self-links are not allowed");
    }
    bool operator<(const Link& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool operator==(const Link& o) const { return a == o.a && b == o.b; }
};

// The set of currently-known bidirectional links, each with the time it was
// last confirmed.
class LinkMap {
public:
    void refresh(NodeId x, NodeId y, double t) {
        auto [it, inserted] = links_.try_emplace(Link(x, y), t);
        if (!inserted)
            it->second = std::max(it->second, t);
    }

    void expire_before(double t) {
        for (auto it = links_.begin(); it != links_.end();)
            it = (it->second < t) ? links_.erase(it) : std::next(it);
    }

    bool contains(NodeId x, NodeId y) const { return links_.count(Link(x, y)) != 0; }
    std::size_t size() const { return links_.size(); }
    bool empty() const { return links_.empty(); }

    std::vector<Link> links() const {
        std::vector<Link> out;
        out.reserve(links_.size());
        for (const auto& [link, t] : links_)
            out.push_back(link);
        return out;
    }

    template <typename F> void for_each(F&& f) const {
        for (const auto& [link, t] : links_)
            f(link, t);
    }

private:
    std::map<Link, double> links_;
};

} // namespace manetsim
