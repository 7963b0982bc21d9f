#pragma once

#include <cstdint>
#include <stdexcept>

namespace manetsim {

// Deterministic per-consumer random stream. Every stateful consumer of
// randomness (mobility, channel, traffic, jitter, positioning noise) owns
// its own stream so that enabling or disabling one feature never shifts
// the draws seen by another. The generator is a splitmix64 counter with a
// per-stream increment, so identical (seed, stream_id) pairs reproduce the
// same sequence on every platform and distinct stream ids never share
// state.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : state_(mix(mix(seed) ^ mix(stream_id ^ 0x6a09e667f3bcc909ull))),
          increment_(mix(stream_id ^ 0xbb67ae8584caa73bull) | 1ull) {}

    std::uint64_t next_u64() {
        state_ += increment_;
        return mix(state_);
    }

    // Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi). The degenerate interval [v, v) yields v.
    double uniform(double lo, double hi) {
        if (lo > hi)
            throw std::invalid_argument("RandomStream::uniform: lo > hi");
        if (lo == hi)
            return lo;
        return lo + next_double() * (hi - lo);
    }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0)
            throw std::invalid_argument("RandomStream::uniform_index: empty range");
        std::uint64_t i = static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    std::uint64_t increment_;
};

// Stream labels used by the simulator. Keeping the assignment in one place
// makes runs comparable across protocol variants under the same seed.
enum class StreamId : std::uint64_t {
    Mobility = 0,
    Channel = 1,
    Traffic = 2,
    Jitter = 3,
    Positioning = 4,
};

inline RandomStream make_stream(std::uint64_t seed, StreamId id) {
    return RandomStream(seed, static_cast<std::uint64_t>(id));
}

} // namespace manetsim
