#include "szlab/sl2.hpp"

#include <cmath>

namespace szlab {

SL2Element SL2Element::from_bits(const Field& f, uint32_t a, uint32_t b, uint32_t c,
                                 uint32_t d) {
    for (uint32_t v : {a, b, c, d}) {
        if (v >= f.order()) throw std::invalid_argument("SL2Element: entry out of range");
    }
    uint32_t det = f.mul_bits(a, d) ^ f.mul_bits(b, c);
    if (det != 1) throw std::invalid_argument("SL2Element: determinant must be 1");
    return {{a, b, c, d}, &f};
}

SL2Element SL2Element::identity(const Field& f) { return {{1, 0, 0, 1}, &f}; }

const Field& SL2Element::field() const {
    if (field_ == nullptr) throw std::invalid_argument("SL2Element: unset element");
    return *field_;
}

FieldElement SL2Element::at(int r, int c) const {
    return field().element(e_[size_t(r * 2 + c)]);
}

FieldElement SL2Element::trace() const { return field().element(e_[0] ^ e_[3]); }

bool SL2Element::is_identity() const { return e_ == std::array<uint32_t, 4>{1, 0, 0, 1}; }

SL2Element SL2Element::operator*(const SL2Element& rhs) const {
    const Field& f = field();
    if (!f.same(rhs.field())) throw std::invalid_argument("SL2Element: field mismatch");
    auto m = [&](uint32_t x, uint32_t y) { return f.mul_bits(x, y); };
    std::array<uint32_t, 4> r{
        uint32_t(m(e_[0], rhs.e_[0]) ^ m(e_[1], rhs.e_[2])),
        uint32_t(m(e_[0], rhs.e_[1]) ^ m(e_[1], rhs.e_[3])),
        uint32_t(m(e_[2], rhs.e_[0]) ^ m(e_[3], rhs.e_[2])),
        uint32_t(m(e_[2], rhs.e_[1]) ^ m(e_[3], rhs.e_[3])),
    };
    return {r, field_};
}

SL2Element SL2Element::inversed() const {
    return {{e_[3], e_[1], e_[2], e_[0]}, field_};
}

bool SL2Element::operator==(const SL2Element& rhs) const {
    return field_ != nullptr && rhs.field_ != nullptr && field_->same(*rhs.field_) &&
           e_ == rhs.e_;
}

uint64_t sl2_order(int m) {
    if (m < 1 || m > 20) throw std::invalid_argument("sl2_order: m must be in 1..20");
    uint64_t q = 1ull << m;
    return q * (q * q - 1);
}

SL2Element sl2_sample(const Field& f, Rng& rng) {
    const uint64_t q = f.order();
    const uint64_t chart = q * q * (q - 1);  // top-left entry nonzero
    uint64_t idx = rng.below(sl2_order(f.degree()));
    if (idx < chart) {
        uint64_t t1 = 1 + idx % (q - 1);
        idx /= (q - 1);
        uint64_t t2 = idx % q;
        idx /= q;
        uint64_t t3 = idx;
        // t4 = (t2 t3 + 1) / t1
        uint32_t t4 = f.mul_bits(uint32_t(f.mul_bits(uint32_t(t2), uint32_t(t3)) ^ 1u),
                                 f.pow_bits(uint32_t(t1), q - 2));
        return SL2Element::from_bits(f, uint32_t(t1), uint32_t(t2), uint32_t(t3), t4);
    }
    idx -= chart;
    // top-left zero: [[0, t2], [t2^-1, t4]]
    uint64_t t2 = 1 + idx % (q - 1);
    idx /= (q - 1);
    uint64_t t4 = idx;
    uint32_t t3 = f.pow_bits(uint32_t(t2), q - 2);
    return SL2Element::from_bits(f, 0, uint32_t(t2), t3, uint32_t(t4));
}

std::vector<SL2Element> sl2_enumerate(const Field& f) {
    if (f.degree() > 6) throw capacity_error("sl2_enumerate: capped at q = 64");
    const uint64_t q = f.order();
    std::vector<SL2Element> out;
    out.reserve(sl2_order(f.degree()));
    for (uint64_t t1 = 1; t1 < q; ++t1) {
        uint32_t t1_inv = f.pow_bits(uint32_t(t1), q - 2);
        for (uint64_t t2 = 0; t2 < q; ++t2) {
            for (uint64_t t3 = 0; t3 < q; ++t3) {
                uint32_t t4 =
                    f.mul_bits(uint32_t(f.mul_bits(uint32_t(t2), uint32_t(t3)) ^ 1u), t1_inv);
                out.push_back(SL2Element::from_bits(f, uint32_t(t1), uint32_t(t2), uint32_t(t3),
                                                    t4));
            }
        }
    }
    for (uint64_t t2 = 1; t2 < q; ++t2) {
        uint32_t t3 = f.pow_bits(uint32_t(t2), q - 2);
        for (uint64_t t4 = 0; t4 < q; ++t4) {
            out.push_back(SL2Element::from_bits(f, 0, uint32_t(t2), t3, uint32_t(t4)));
        }
    }
    if (out.size() != sl2_order(f.degree())) {
        throw internal_error("sl2_enumerate: count disagrees with the order formula");
    }
    return out;
}

TraceConcentration trace_concentration(const Field& f, const Word& w, uint64_t pair_samples,
                                       uint64_t seed, bool exhaustive) {
    if (w.empty()) {
        throw std::invalid_argument("trace_concentration: trivial word has constant trace");
    }
    SL2Ops ops{&f};
    TraceConcentration res;
    res.histogram.assign(f.order(), 0);
    res.bound_shape = 1.0 / double(f.order());
    res.exhaustive = exhaustive;

    bool first = true;
    uint32_t first_trace = 0;
    auto record = [&](const SL2Element& a, const SL2Element& b) {
        uint32_t tr = evaluate_word(ops, w, a, b).trace().bits();
        ++res.histogram[tr];
        ++res.samples;
        if (first) {
            first_trace = tr;
            first = false;
        } else if (tr != first_trace) {
            res.nonconstant_witnessed = true;
        }
    };

    if (exhaustive) {
        std::vector<SL2Element> all = sl2_enumerate(f);
        for (const SL2Element& a : all) {
            for (const SL2Element& b : all) record(a, b);
        }
    } else {
        Rng rng = Rng::derive(seed, {stream::kSl2, fnv1a64(w.str())});
        for (uint64_t s = 0; s < pair_samples; ++s) {
            record(sl2_sample(f, rng), sl2_sample(f, rng));
        }
    }

    for (uint64_t t = 0; t < f.order(); ++t) {
        double mass = double(res.histogram[t]) / double(res.samples);
        if (mass > res.max_mass) {
            res.max_mass = mass;
            res.argmax_trace = uint32_t(t);
        }
    }
    return res;
}

Sl2SubfieldMass sl2_subfield_mass(const Field& f, const SL2Element& a, const SL2Element& b,
                                  int steps, uint64_t trials, uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("sl2_subfield_mass: negative step count");
    if (uint64_t(steps) * trials > 1'000'000'000ull) {
        throw capacity_error("sl2_subfield_mass: steps * trials capped at 1e9");
    }
    const std::array<SL2Element, 4> gens{a, a.inversed(), b, b.inversed()};
    Sl2SubfieldMass res;
    res.trials = trials;
    res.union_fraction = double(proper_subfield_union_size(f.degree())) / double(f.order());
    for (uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::derive(seed, {stream::kSl2, t});
        SL2Element g = SL2Element::identity(f);
        for (int s = 0; s < steps; ++s) g = g * gens[rng.below(4)];
        if (in_proper_subfield(g.trace())) ++res.hits;
    }
    res.value = double(res.hits) / double(trials);
    res.half_width = 1.96 * std::sqrt(res.value * (1 - res.value) / double(trials));
    return res;
}

}  // namespace szlab
