#include "manetsim/mobility/trace.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace manetsim {

namespace {

bool parse_double(std::string_view s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

MobilityTrace MobilityTrace::load(std::istream& in) {
    MobilityTrace trace;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#')
            continue;
        double fields[5];
        std::size_t field = 0;
        std::size_t start = 0;
        bool ok = true;
        for (std::size_t i = 0; i <= sv.size() && ok; ++i) {
            if (i == sv.size() || sv[i] == ',') {
                if (field >= 5) {
                    ok = false;
                    break;
                }
                ok = parse_double(trim(sv.substr(start, i - start)), fields[field]);
                ++field;
                start = i + 1;
            }
        }
        if (!ok || field != 5)
            throw TraceError("trace parse error at line " + std::to_string(line_no) +
                             ": expected `t,node_id,x,y,z`");
        const double t = fields[0];
        const double id_raw = fields[1];
        const auto id = static_cast<NodeId>(id_raw);
        if (id_raw < 0.0 || static_cast<double>(id) != id_raw)
            throw TraceError("trace parse error at line " + std::to_string(line_no) +
                             ": node_id must be a non-negative integer");
        auto& list = trace.samples_[id];
        if (!list.empty() && t <= list.back().t)
            throw TraceError("trace validation error at line " + std::to_string(line_no) +
                             ": non-monotonic timestamp for node " + std::to_string(id));
        list.push_back({t, {fields[2], fields[3], fields[4]}});
    }
    if (trace.samples_.empty())
        throw TraceError("trace contains no samples");
    return trace;
}

MobilityTrace MobilityTrace::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw TraceError("cannot open trace file: " + path);
    return load(in);
}

void MobilityTrace::append(NodeId node, double t, const Vec3& pos) {
    auto& list = samples_[node];
    if (!list.empty() && t <= list.back().t)
        throw TraceError("trace append: non-monotonic timestamp for node " +
                         std::to_string(node));
    list.push_back({t, pos});
}

void MobilityTrace::save(std::ostream& out) const {
    out.precision(17);
    for (const auto& [node, list] : samples_)
        for (const auto& s : list)
            out << s.t << ',' << node << ',' << s.pos.x << ',' << s.pos.y << ',' << s.pos.z
                << '\n';
}

std::vector<NodeId> MobilityTrace::node_ids() const {
    std::vector<NodeId> ids;
    ids.reserve(samples_.size());
    for (const auto& [node, list] : samples_)
        ids.push_back(node);
    return ids;
}

const std::vector<TraceSample>& MobilityTrace::samples(NodeId node) const {
    auto it = samples_.find(node);
    if (it == samples_.end())
        throw TraceError("unknown trace node " + std::to_string(node));
    return it->second;
}

Vec3 MobilityTrace::position_at(NodeId node, double t) const {
    const auto& list = samples(node);
    if (t <= list.front().t)
        return list.front().pos;
    if (t >= list.back().t)
        return list.back().pos;
    auto it = std::upper_bound(list.begin(), list.end(), t,
                               [](double value, const TraceSample& s) { return value < s.t; });
    const TraceSample& hi = *it;
    const TraceSample& lo = *(it - 1);
    const double f = (t - lo.t) / (hi.t - lo.t);
    return lo.pos + (hi.pos - lo.pos) * f;
}

Vec3 MobilityTrace::velocity_at(NodeId node, double t) const {
    const auto& list = samples(node);
    if (t < list.front().t || t >= list.back().t)
        return {};
    auto it = std::upper_bound(list.begin(), list.end(), t,
                               [](double value, const TraceSample& s) { return value < s.t; });
    if (it == list.begin() || it == list.end())
        return {};
    const TraceSample& hi = *it;
    const TraceSample& lo = *(it - 1);
    return (hi.pos - lo.pos) / (hi.t - lo.t);
}

double MobilityTrace::end_time() const {
    double end = 0.0;
    for (const auto& [node, list] : samples_)
        end = std::max(end, list.back().t);
    return end;
}

} // namespace manetsim
