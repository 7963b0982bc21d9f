#pragma once

#include "manetsim/types.hpp"
#include "manetsim/vec3.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace manetsim {

// Error raised for malformed or inconsistent trace files. Parse failures
// carry the offending line number.
class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TraceSample {
    double t;
    Vec3 pos;
};

// Externally recorded mobility: one timed position list per node. Between
// samples positions are linearly interpolated; before the first and after
// the last sample a node holds its position.
//
// File format: one sample per line, `t,node_id,x,y,z` (seconds, meters),
// comma-separated. Lines starting with `#` and blank lines are ignored.
class MobilityTrace {
public:
    static MobilityTrace load(std::istream& in);
    static MobilityTrace load_file(const std::string& path);

    // Builder interface for engine-generated traces. Samples must be
    // appended in increasing time order per node.
    void append(NodeId node, double t, const Vec3& pos);
    void save(std::ostream& out) const;

    std::vector<NodeId> node_ids() const;
    bool empty() const { return samples_.empty(); }

    Vec3 position_at(NodeId node, double t) const;
    // Slope of the surrounding segment; zero while holding at either end.
    Vec3 velocity_at(NodeId node, double t) const;

    double end_time() const;

    const std::vector<TraceSample>& samples(NodeId node) const;

private:
    std::map<NodeId, std::vector<TraceSample>> samples_;
};

} // namespace manetsim
