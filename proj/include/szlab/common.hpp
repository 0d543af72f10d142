#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace szlab {

using u128 = unsigned __int128;

/// Thrown when a request exceeds a documented capacity limit; the message
/// names the limit.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails. This signals a bug in
/// the library, never bad user input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::string u128_to_string(u128 v);

/// FNV-1a, 64-bit. Used for content hashes in report manifests and for
/// folding identifiers into RNG stream derivations. Not cryptographic.
inline uint64_t fnv1a64(std::string_view data, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t v);

/// Distinct prime factors by trial division; for the small integers that
/// appear as group orders and torus sizes.
inline std::vector<uint64_t> small_prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace szlab
