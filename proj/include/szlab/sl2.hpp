#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "szlab/field.hpp"
#include "szlab/rng.hpp"
#include "szlab/words.hpp"

namespace szlab {

/// 2x2 matrix over GF(2^m) with determinant 1.
class SL2Element {
public:
    static SL2Element from_bits(const Field& f, uint32_t a, uint32_t b, uint32_t c, uint32_t d);
    static SL2Element identity(const Field& f);

    const Field& field() const;
    FieldElement at(int r, int c) const;
    FieldElement trace() const;
    bool is_identity() const;

    SL2Element operator*(const SL2Element& rhs) const;
    /// [[d, b], [c, a]] in characteristic 2.
    SL2Element inversed() const;
    bool operator==(const SL2Element& rhs) const;

private:
    SL2Element(std::array<uint32_t, 4> e, const Field* f) : e_(e), field_(f) {}
    std::array<uint32_t, 4> e_{};
    const Field* field_ = nullptr;
};

struct SL2Ops {
    const Field* field;
    using Element = SL2Element;
    Element identity() const { return SL2Element::identity(*field); }
    Element multiply(const Element& x, const Element& y) const { return x * y; }
    Element inverse(const Element& x) const { return x.inversed(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
};

/// |SL2(q)| = q (q^2 - 1).
uint64_t sl2_order(int m);

/// Exactly uniform: unranks the chart with top-left entry nonzero
/// (q^2 (q-1) elements) against the complementary stratum (q (q-1)).
SL2Element sl2_sample(const Field& f, Rng& rng);

/// All elements, by strata; capped at q = 64.
std::vector<SL2Element> sl2_enumerate(const Field& f);

struct TraceConcentration {
    std::vector<uint64_t> histogram;  // indexed by trace bits
    uint64_t samples = 0;
    double max_mass = 0;
    uint32_t argmax_trace = 0;
    bool exhaustive = false;
    double bound_shape = 0;  // q^(-1), the shape the mass is reported against
    bool nonconstant_witnessed = false;  // two pairs with distinct traces seen
};

/// Distribution of tr(w(a,b)) over pairs (a,b): exhaustive over all pairs
/// (q <= 8) or sampled. Rejects the trivial word (constant trace).
TraceConcentration trace_concentration(const Field& f, const Word& w, uint64_t pair_samples,
                                       uint64_t seed, bool exhaustive);

struct Sl2SubfieldMass {
    double value = 0;
    double half_width = 0;
    uint64_t hits = 0;
    uint64_t trials = 0;
    double union_fraction = 0;  // |union of proper subfields| / q
};

/// Empirical mass of n-step walk endpoints whose trace lies in the union of
/// proper subfields (the conjugation-invariant proxy).
Sl2SubfieldMass sl2_subfield_mass(const Field& f, const SL2Element& a, const SL2Element& b,
                                  int steps, uint64_t trials, uint64_t seed);

}  // namespace szlab
