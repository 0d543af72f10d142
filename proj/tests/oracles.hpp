// Test-only oracles, kept deliberately independent of the library's
// implementation paths: naive polynomial arithmetic over GF(2), brute-force
// root counting by evaluation, and trial-division irreducibility.
#pragma once

#include <cstdint>
#include <vector>

#include "szlab/field.hpp"

namespace oracles {

// Multiply two GF(2)[X] polynomials given as coefficient vectors (one int
// per coefficient, schoolbook), reduce nothing.
inline std::vector<int> gf2_poly_mul(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 2;
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

inline std::vector<int> bits_to_poly(uint64_t bits) {
    std::vector<int> p;
    do {
        p.push_back(int(bits & 1));
        bits >>= 1;
    } while (bits);
    return p;
}

inline uint64_t poly_to_bits(const std::vector<int>& p) {
    uint64_t b = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i]) b |= 1ull << i;
    return b;
}

// Remainder of a / b over GF(2), coefficient-vector division.
inline std::vector<int> gf2_poly_mod(std::vector<int> a, const std::vector<int>& b) {
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + b[i]) % 2;
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

inline bool gf2_poly_is_zero(const std::vector<int>& p) {
    for (int c : p)
        if (c) return false;
    return true;
}

// Irreducibility over GF(2) by trial division against every polynomial of
// degree 1 .. deg/2.
inline bool irreducible_by_trial_division(uint64_t poly, int degree) {
    std::vector<int> p = bits_to_poly(poly);
    for (int d = 1; d <= degree / 2; ++d) {
        for (uint64_t cand = 1ull << d; cand < (2ull << d); ++cand) {
            if (gf2_poly_is_zero(gf2_poly_mod(p, bits_to_poly(cand)))) return false;
        }
    }
    return true;
}

// GF(2^m) multiplication computed the long way: coefficient-vector multiply,
// then explicit reduction by the modulus.
inline uint32_t field_mul_naive(const szlab::Field& f, uint32_t a, uint32_t b) {
    if (a == 0 || b == 0) return 0;
    std::vector<int> prod = gf2_poly_mul(bits_to_poly(a), bits_to_poly(b));
    return uint32_t(poly_to_bits(gf2_poly_mod(prod, bits_to_poly(f.modulus()))));
}

// Distinct roots of a univariate polynomial by full-field evaluation.
inline int count_roots_exhaustive(const szlab::UniPoly& p) {
    const szlab::Field& f = p.field();
    int n = 0;
    for (uint64_t x = 0; x < f.order(); ++x) {
        if (p.eval(f.element(x)).is_zero()) ++n;
    }
    return n;
}

inline std::vector<uint32_t> roots_exhaustive(const szlab::UniPoly& p) {
    const szlab::Field& f = p.field();
    std::vector<uint32_t> roots;
    for (uint64_t x = 0; x < f.order(); ++x) {
        if (p.eval(f.element(x)).is_zero()) roots.push_back(uint32_t(x));
    }
    return roots;
}

}  // namespace oracles
