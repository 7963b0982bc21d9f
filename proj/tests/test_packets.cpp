#include "manetsim/routing/packets.hpp"

#include "manetsim/sim/random.hpp"

#include <doctest.h>

using namespace manetsim;

namespace {

Vec3 random_vec(RandomStream& rng) {
    return {rng.uniform(-500, 500), rng.uniform(-500, 500), rng.uniform(-500, 500)};
}

} // namespace

TEST_CASE("wire sizes follow the fixed layouts") {
    CHECK(wire_size(OgmPacket{1, 2}) == 9);
    CHECK(wire_size(HelloPacket{1, 2, {}}) == 9);
    CHECK(wire_size(HelloPacket{1, 2, {3, 4, 5}}) == 9 + 12);
    CHECK(wire_size(TcPacket{1, 2, {{1, 3}, {1, 4}}}) == 9 + 16);
    CHECK(wire_size(MobilityUpdatePacket{}) == 1000);
    CHECK(wire_size(PathScorePacket{}) == 67);
    DataPacket d;
    d.size_bytes = 1460;
    CHECK(wire_size(Packet{d}) == 1460);
}

TEST_CASE("serialized bytes match the declared wire size") {
    RandomStream rng(1, 0);
    MobilityUpdatePacket mup{7, 42, random_vec(rng), random_vec(rng), {random_vec(rng)}};
    CHECK(serialize(Packet{mup}).size() == 1000);
    PathScorePacket psp{3, 9, random_vec(rng), random_vec(rng), 0.75, 4};
    CHECK(serialize(Packet{psp}).size() == 67);
    HelloPacket hello{1, 2, {9, 8}};
    CHECK(serialize(Packet{hello}).size() == wire_size(Packet{hello}));
    TcPacket tc{1, 2, {{1, 9}}};
    CHECK(serialize(Packet{tc}).size() == wire_size(Packet{tc}));
}

TEST_CASE("mobility update airtime at 54 Mbit/s") {
    CHECK(1000.0 * 8.0 / 54e6 == doctest::Approx(148.1e-6).epsilon(1e-3));
}

TEST_CASE("random packets round-trip exactly") {
    RandomStream rng(77, 0);
    for (int trial = 0; trial < 300; ++trial) {
        Packet p;
        switch (rng.uniform_index(5)) {
        case 0: {
            HelloPacket hello{NodeId(rng.uniform_index(100)), std::uint32_t(rng.uniform_index(1 << 20)), {}};
            const auto n = rng.uniform_index(8);
            for (std::uint64_t i = 0; i < n; ++i)
                hello.neighbors.push_back(NodeId(rng.uniform_index(100)));
            p = hello;
            break;
        }
        case 1: {
            TcPacket tc{NodeId(rng.uniform_index(100)), std::uint32_t(rng.uniform_index(1 << 20)), {}};
            const auto n = rng.uniform_index(8);
            for (std::uint64_t i = 0; i < n; ++i) {
                const auto a = NodeId(rng.uniform_index(100));
                tc.links.emplace_back(a, NodeId(a + 1 + rng.uniform_index(10)));
            }
            p = tc;
            break;
        }
        case 2:
            p = OgmPacket{NodeId(rng.uniform_index(100)), std::uint32_t(rng.uniform_index(1 << 20))};
            break;
        case 3: {
            MobilityUpdatePacket mup{NodeId(rng.uniform_index(100)),
                                     std::uint32_t(rng.uniform_index(1 << 20)),
                                     random_vec(rng),
                                     random_vec(rng),
                                     {}};
            const auto n = rng.uniform_index(5);
            for (std::uint64_t i = 0; i < n; ++i)
                mup.waypoints.push_back(random_vec(rng));
            p = mup;
            break;
        }
        default:
            p = PathScorePacket{NodeId(rng.uniform_index(100)),
                                std::uint32_t(rng.uniform_index(1 << 20)),
                                random_vec(rng),
                                random_vec(rng),
                                rng.uniform(0.0, 1.0),
                                std::uint16_t(rng.uniform_index(32))};
            break;
        }
        const auto bytes = serialize(p);
        const Packet back = deserialize(bytes);
        REQUIRE(back.index() == p.index());
        CHECK(serialize(back) == bytes);
    }
}

TEST_CASE("round-trip preserves every field of a mobility update") {
    const MobilityUpdatePacket mup{5, 1234, {1.5, -2.25, 3.75}, {0.5, 0, -0.125},
                                   {{10, 20, 30}, {40, 50, 60}, {70, 80, 90}}};
    const Packet back = deserialize(serialize(Packet{mup}));
    const auto& got = std::get<MobilityUpdatePacket>(back);
    CHECK(got.origin == 5);
    CHECK(got.seq == 1234);
    CHECK(got.position == mup.position);
    CHECK(got.steering == mup.steering);
    CHECK(got.waypoints == mup.waypoints);
}

TEST_CASE("round-trip preserves every field of a path score packet") {
    const PathScorePacket psp{9, 77, {1, 2, 3}, {4, 5, 6}, 0.123456789012345, 11};
    const Packet back = deserialize(serialize(Packet{psp}));
    const auto& got = std::get<PathScorePacket>(back);
    CHECK(got.origin == 9);
    CHECK(got.seq == 77);
    CHECK(got.forwarder_position == psp.forwarder_position);
    CHECK(got.forwarder_predicted_position == psp.forwarder_predicted_position);
    CHECK(got.score == psp.score);
    CHECK(got.hop_count == 11);
}

TEST_CASE("truncated or malformed bytes raise parse errors") {
    const auto bytes = serialize(Packet{PathScorePacket{1, 2, {}, {}, 0.5, 0}});
    CHECK_THROWS_AS(deserialize(std::span(bytes).subspan(0, 20)), PacketParseError);
    CHECK_THROWS_AS(deserialize(std::span(bytes).subspan(0, 5)), PacketParseError);

    auto hello = serialize(Packet{HelloPacket{1, 2, {3, 4}}});
    hello.pop_back(); // ragged neighbor list
    CHECK_THROWS_AS(deserialize(hello), PacketParseError);

    std::vector<std::uint8_t> unknown(9, 0);
    unknown[8] = 0xee;
    CHECK_THROWS_AS(deserialize(unknown), PacketParseError);
}
