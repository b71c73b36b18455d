#pragma once

#include <cstdint>

namespace vcr {

/// splitmix64 stream. The state advances by the golden-ratio increment and
/// every output is a finalizer mix of the new state.
///
/// This is the single random source of the library. Bounded draws use plain
/// modulo reduction and Bernoulli draws compare the top 53 bits against
/// floor(p * 2^53), so any implementation of the same three steps reproduces
/// every generated matrix bit for bit from the seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    bool next_bernoulli(double p) {
        const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
        return (next() >> 11) < threshold;
    }

private:
    std::uint64_t state_;
};

}  // namespace vcr
