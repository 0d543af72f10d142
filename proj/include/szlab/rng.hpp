#pragma once

#include <cstdint>
#include <initializer_list>

#include "szlab/common.hpp"

namespace szlab {

/// splitmix64 generator. Standard-library engines and distributions are
/// implementation-defined, so every random draw in this project goes through
/// this class; reports stay byte-identical across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        uint64_t t = (~n + 1) % n;  // 2^64 mod n
        for (;;) {
            uint64_t r = next();
            if (r >= t) return r % n;
        }
    }

    u128 below128(u128 n) {
        if (n == 0) throw std::invalid_argument("Rng::below128: n must be positive");
        if (n <= u128(~uint64_t(0))) return below(uint64_t(n));
        u128 t = (~n + 1) % n;  // 2^128 mod n
        for (;;) {
            u128 hi = next();
            u128 r = (hi << 64) | next();
            if (r >= t) return r % n;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    /// Derives an independent stream from a master seed and a path of
    /// integers (module id, trial index, ...). Pure function of its inputs,
    /// so per-trial streams are reproducible under any execution order.
    static Rng derive(uint64_t master, std::initializer_list<uint64_t> path) {
        uint64_t s = mix(master ^ 0x5851f42d4c957f2dull);
        for (uint64_t p : path) s = mix(s ^ mix(p + 0x9e3779b97f4a7c15ull));
        return Rng(s);
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

/// Stable stream ids for Rng::derive paths.
namespace stream {
constexpr uint64_t kPair = 1;
constexpr uint64_t kWalk = 2;
constexpr uint64_t kPoly = 3;
constexpr uint64_t kSpectral = 4;
constexpr uint64_t kWitness = 5;
constexpr uint64_t kSl2 = 6;
constexpr uint64_t kTargetCheck = 7;
constexpr uint64_t kTuple = 8;
}  // namespace stream

}  // namespace szlab
