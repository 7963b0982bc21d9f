#include "manetsim/routing/packets.hpp"

#include <bit>
#include <cstring>

namespace manetsim {

namespace {

struct Writer {
    std::vector<std::uint8_t> out;

    void u8(std::uint8_t v) { out.push_back(v); }
    void u16(std::uint16_t v) {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>(v >> shift));
    }
    void f64(double v) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int shift = 56; shift >= 0; shift -= 8)
            out.push_back(static_cast<std::uint8_t>(bits >> shift));
    }
    void vec3(const Vec3& v) {
        f64(v.x);
        f64(v.y);
        f64(v.z);
    }
    void pad_to(std::size_t size) {
        if (out.size() > size)
            throw std::logic_error("packet exceeds its fixed wire size");
        out.resize(size, 0);
    }
};

struct Reader {
    std::span<const std::uint8_t> in;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > in.size())
            throw PacketParseError("truncated packet");
    }
    std::uint8_t u8() {
        need(1);
        return in[pos++];
    }
    std::uint16_t u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(in[pos] << 8 | in[pos + 1]);
        pos += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v = v << 8 | in[pos + i];
        pos += 4;
        return v;
    }
    double f64() {
        need(8);
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i)
            bits = bits << 8 | in[pos + i];
        pos += 8;
        return std::bit_cast<double>(bits);
    }
    Vec3 vec3() {
        const double x = f64();
        const double y = f64();
        const double z = f64();
        return {x, y, z};
    }
};

void write_header(Writer& w, NodeId origin, std::uint32_t seq, PacketType type) {
    w.u32(origin);
    w.u32(seq);
    w.u8(static_cast<std::uint8_t>(type));
}

constexpr std::size_t kHeaderSize = 9;

} // namespace

PacketType type_of(const Packet& p) {
    return static_cast<PacketType>(p.index() + 1);
}

const char* type_name(PacketType t) {
    switch (t) {
    case PacketType::Hello: return "HELLO";
    case PacketType::Tc: return "TC";
    case PacketType::Ogm: return "OGM";
    case PacketType::MobilityUpdate: return "MUP";
    case PacketType::PathScore: return "PSP";
    case PacketType::Data: return "DATA";
    }
    return "?";
}

NodeId origin_of(const Packet& p) {
    return std::visit([](const auto& pkt) { return pkt.origin; }, p);
}

std::uint32_t seq_of(const Packet& p) {
    return std::visit([](const auto& pkt) { return pkt.seq; }, p);
}

std::size_t wire_size(const Packet& p) {
    return std::visit(
        [](const auto& pkt) -> std::size_t {
            using T = std::decay_t<decltype(pkt)>;
            if constexpr (std::is_same_v<T, HelloPacket>)
                return kHeaderSize + 4 * pkt.neighbors.size();
            else if constexpr (std::is_same_v<T, TcPacket>)
                return kHeaderSize + 8 * pkt.links.size();
            else if constexpr (std::is_same_v<T, OgmPacket>)
                return kHeaderSize;
            else if constexpr (std::is_same_v<T, MobilityUpdatePacket>)
                return MobilityUpdatePacket::kWireSize;
            else if constexpr (std::is_same_v<T, PathScorePacket>)
                return PathScorePacket::kWireSize;
            else
                return pkt.size_bytes;
        },
        p);
}

std::vector<std::uint8_t> serialize(const Packet& p) {
    Writer w;
    std::visit(
        [&w](const auto& pkt) {
            using T = std::decay_t<decltype(pkt)>;
            if constexpr (std::is_same_v<T, HelloPacket>) {
                write_header(w, pkt.origin, pkt.seq, PacketType::Hello);
                for (NodeId n : pkt.neighbors)
                    w.u32(n);
            } else if constexpr (std::is_same_v<T, TcPacket>) {
                write_header(w, pkt.origin, pkt.seq, PacketType::Tc);
                for (const auto& [a, b] : pkt.links) {
                    w.u32(a);
                    w.u32(b);
                }
            } else if constexpr (std::is_same_v<T, OgmPacket>) {
                write_header(w, pkt.origin, pkt.seq, PacketType::Ogm);
            } else if constexpr (std::is_same_v<T, MobilityUpdatePacket>) {
                if (pkt.waypoints.size() > MobilityUpdatePacket::kMaxWaypoints)
                    throw std::invalid_argument("MobilityUpdatePacket: too many waypoints");
                write_header(w, pkt.origin, pkt.seq, PacketType::MobilityUpdate);
                w.vec3(pkt.position);
                w.vec3(pkt.steering);
                w.u8(static_cast<std::uint8_t>(pkt.waypoints.size()));
                for (const auto& wp : pkt.waypoints)
                    w.vec3(wp);
                w.pad_to(MobilityUpdatePacket::kWireSize);
            } else if constexpr (std::is_same_v<T, PathScorePacket>) {
                write_header(w, pkt.origin, pkt.seq, PacketType::PathScore);
                w.vec3(pkt.forwarder_position);
                w.vec3(pkt.forwarder_predicted_position);
                w.f64(pkt.score);
                w.u16(pkt.hop_count);
            } else {
                throw std::invalid_argument("data payloads are opaque, not serialized");
            }
        },
        p);
    return w.out;
}

Packet deserialize(std::span<const std::uint8_t> bytes) {
    Reader r{bytes};
    const NodeId origin = r.u32();
    const std::uint32_t seq = r.u32();
    const auto type = static_cast<PacketType>(r.u8());
    switch (type) {
    case PacketType::Hello: {
        HelloPacket pkt{origin, seq, {}};
        if ((bytes.size() - kHeaderSize) % 4 != 0)
            throw PacketParseError("HELLO body is not a whole number of neighbor ids");
        while (r.pos < bytes.size())
            pkt.neighbors.push_back(r.u32());
        return pkt;
    }
    case PacketType::Tc: {
        TcPacket pkt{origin, seq, {}};
        if ((bytes.size() - kHeaderSize) % 8 != 0)
            throw PacketParseError("TC body is not a whole number of links");
        while (r.pos < bytes.size()) {
            const NodeId a = r.u32();
            const NodeId b = r.u32();
            pkt.links.emplace_back(a, b);
        }
        return pkt;
    }
    case PacketType::Ogm:
        if (bytes.size() != kHeaderSize)
            throw PacketParseError("OGM carries no body");
        return OgmPacket{origin, seq};
    case PacketType::MobilityUpdate: {
        if (bytes.size() != MobilityUpdatePacket::kWireSize)
            throw PacketParseError("MobilityUpdatePacket must be exactly 1000 bytes");
        MobilityUpdatePacket pkt{origin, seq, {}, {}, {}};
        pkt.position = r.vec3();
        pkt.steering = r.vec3();
        const std::uint8_t count = r.u8();
        if (count > MobilityUpdatePacket::kMaxWaypoints)
            throw PacketParseError("MobilityUpdatePacket waypoint count out of range");
        for (std::uint8_t i = 0; i < count; ++i)
            pkt.waypoints.push_back(r.vec3());
        return pkt;
    }
    case PacketType::PathScore: {
        if (bytes.size() != PathScorePacket::kWireSize)
            throw PacketParseError("PathScorePacket has a fixed 67-byte layout");
        PathScorePacket pkt{origin, seq, {}, {}, 0.0, 0};
        pkt.forwarder_position = r.vec3();
        pkt.forwarder_predicted_position = r.vec3();
        pkt.score = r.f64();
        pkt.hop_count = r.u16();
        return pkt;
    }
    default:
        throw PacketParseError("unknown packet type " + std::to_string(int(type)));
    }
}

} // namespace manetsim
