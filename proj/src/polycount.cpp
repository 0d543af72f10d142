#include "szlab/polycount.hpp"

#include <algorithm>
#include <cmath>

namespace szlab {

// ----------------------------------------------------------------- BiPoly --

BiPoly BiPoly::from_coeff_bits(const Field& f, int dx, int dy,
                               std::span<const uint32_t> coeffs) {
    if (dx < 0 || dy < 0 || coeffs.size() != size_t(dx + 1) * size_t(dy + 1)) {
        throw std::invalid_argument("BiPoly: coefficient table shape mismatch");
    }
    for (uint32_t c : coeffs) {
        if (c >= f.order()) throw std::invalid_argument("BiPoly: coefficient out of range");
    }
    // trim zero top rows / columns to the canonical shape
    int top_x = -1, top_y = -1;
    for (int i = 0; i <= dx; ++i) {
        for (int j = 0; j <= dy; ++j) {
            if (coeffs[size_t(i) * size_t(dy + 1) + size_t(j)] != 0) {
                top_x = std::max(top_x, i);
                top_y = std::max(top_y, j);
            }
        }
    }
    BiPoly p;
    p.field_ = &f;
    if (top_x < 0) return p;  // zero polynomial
    p.dx_ = top_x;
    p.dy_ = top_y;
    p.c_.resize(size_t(top_x + 1) * size_t(top_y + 1));
    for (int i = 0; i <= top_x; ++i) {
        for (int j = 0; j <= top_y; ++j) {
            p.c_[size_t(i) * size_t(top_y + 1) + size_t(j)] =
                coeffs[size_t(i) * size_t(dy + 1) + size_t(j)];
        }
    }
    return p;
}

BiPoly BiPoly::random_nonzero(const Field& f, int d, Rng& rng) {
    if (d < 0) throw std::invalid_argument("BiPoly: negative degree bound");
    std::vector<uint32_t> coeffs(size_t(d + 1) * size_t(d + 1));
    for (;;) {
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = uint32_t(rng.below(f.order()));
            nonzero |= c != 0;
        }
        if (nonzero) return from_coeff_bits(f, d, d, coeffs);
    }
}

FieldElement BiPoly::eval(FieldElement x, FieldElement y) const {
    const Field& f = field();
    if (is_zero()) return f.zero();
    // Horner in x over row polynomials in y.
    uint32_t acc = 0;
    for (int i = dx_; i >= 0; --i) {
        uint32_t row = 0;
        for (int j = dy_; j >= 0; --j) {
            row = f.mul_bits(row, y.bits()) ^ coeff_bits(i, j);
        }
        acc = f.mul_bits(acc, x.bits()) ^ row;
    }
    return f.element(acc);
}

UniPoly BiPoly::substitute_twist() const {
    const Field& f = field();
    if (is_zero()) return UniPoly(f);
    const int theta = int(f.twist());
    std::vector<uint32_t> c(size_t(dx_ + dy_ * theta) + 1, 0);
    for (int i = 0; i <= dx_; ++i) {
        for (int j = 0; j <= dy_; ++j) {
            c[size_t(i + j * theta)] ^= coeff_bits(i, j);
        }
    }
    return UniPoly::from_coeff_bits(f, c);
}

uint64_t twisted_root_count(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("twisted_root_count: zero polynomial");
    UniPoly u = p.substitute_twist();
    // Monomial exponents i + j*theta only collide for d >= theta, where the
    // substitution can cancel to zero; then every point is a solution.
    if (u.is_zero()) return p.field().order();
    if (u.degree() == 0) return 0;
    return uint64_t(count_roots(u));
}

TwistAudit harder_twist_audit(const Field& f, int d, uint64_t samples, uint64_t seed,
                              bool cross_validate) {
    if (d < 1) throw std::invalid_argument("harder_twist_audit: degree must be >= 1");
    Rng rng = Rng::derive(seed, {stream::kPoly, uint64_t(f.degree()), uint64_t(d)});
    TwistAudit audit;
    audit.bound = 2 * uint64_t(d) * uint64_t(d);
    audit.cross_validated = cross_validate;
    for (uint64_t s = 0; s < samples; ++s) {
        BiPoly p = BiPoly::random_nonzero(f, d, rng);
        uint64_t n = twisted_root_count(p);
        if (cross_validate) {
            uint64_t brute = 0;
            for (uint64_t x = 0; x < f.order(); ++x) {
                FieldElement e = f.element(x);
                if (p.eval(e, e.theta()).is_zero()) ++brute;
            }
            if (brute != n) {
                throw internal_error("harder_twist_audit: substitution count disagrees with "
                                     "exhaustive evaluation");
            }
        }
        if (n > audit.max_count) {
            audit.max_count = n;
            audit.witness_dx = p.degree_x();
            audit.witness_dy = p.degree_y();
            audit.witness_coeffs.clear();
            for (int i = 0; i <= p.degree_x(); ++i) {
                for (int j = 0; j <= p.degree_y(); ++j) {
                    audit.witness_coeffs.push_back(p.coeff_bits(i, j));
                }
            }
        }
        if (n > audit.bound) ++audit.violations;
        ++audit.samples;
    }
    audit.ok = audit.violations == 0;
    return audit;
}

// ------------------------------------------------------------ TwistedPoly --

int TwistedPoly::degree_bound() const {
    int d = 0;
    for (int b : bounds_) d = std::max(d, b);
    return d;
}

FieldElement TwistedPoly::eval(std::span<const FieldElement> xs) const {
    if (int(xs.size()) != k_) {
        throw std::invalid_argument("TwistedPoly::eval: expected " + std::to_string(k_) +
                                    " variables");
    }
    return eval_(xs);
}

TwistedPoly TwistedPoly::from_dense(const Field& f, int k, int d, std::vector<uint32_t> coeffs) {
    if (k < 1 || d < 0) throw std::invalid_argument("TwistedPoly: bad shape");
    size_t expected = 1;
    for (int v = 0; v < 2 * k; ++v) expected *= size_t(d + 1);
    if (coeffs.size() != expected) {
        throw std::invalid_argument("TwistedPoly: coefficient table shape mismatch");
    }
    TwistedPoly p;
    p.field_ = &f;
    p.k_ = k;
    // exact per-variable bounds from the table
    p.bounds_.assign(size_t(2 * k), 0);
    for (size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (coeffs[idx] == 0) continue;
        size_t rest = idx;
        for (int v = 0; v < 2 * k; ++v) {
            int e = int(rest % size_t(d + 1));
            rest /= size_t(d + 1);
            p.bounds_[size_t(v)] = std::max(p.bounds_[size_t(v)], e);
        }
    }
    p.eval_ = [&f, k, d, coeffs = std::move(coeffs)](std::span<const FieldElement> xs) {
        // power tables for each of the 2k formal variables
        std::vector<uint32_t> powers(size_t(2 * k) * size_t(d + 1));
        for (int v = 0; v < 2 * k; ++v) {
            uint32_t base = v < k ? xs[size_t(v)].bits() : xs[size_t(v - k)].theta().bits();
            uint32_t acc = 1;
            for (int e = 0; e <= d; ++e) {
                powers[size_t(v) * size_t(d + 1) + size_t(e)] = acc;
                acc = f.mul_bits(acc, base);
            }
        }
        uint32_t sum = 0;
        for (size_t idx = 0; idx < coeffs.size(); ++idx) {
            if (coeffs[idx] == 0) continue;
            uint32_t term = coeffs[idx];
            size_t rest = idx;
            for (int v = 0; v < 2 * k; ++v) {
                int e = int(rest % size_t(d + 1));
                rest /= size_t(d + 1);
                if (e) term = f.mul_bits(term, powers[size_t(v) * size_t(d + 1) + size_t(e)]);
            }
            sum ^= term;
        }
        return f.element(sum);
    };
    return p;
}

TwistedPoly TwistedPoly::random_dense(const Field& f, int k, int d, Rng& rng) {
    size_t n = 1;
    for (int v = 0; v < 2 * k; ++v) n *= size_t(d + 1);
    std::vector<uint32_t> coeffs(n);
    for (;;) {
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = uint32_t(rng.below(f.order()));
            nonzero |= c != 0;
        }
        if (nonzero) return from_dense(f, k, d, coeffs);
    }
}

bool TwistedPoly::certify(uint64_t budget, uint64_t seed) {
    if (certified_) return true;
    Rng rng = Rng::derive(seed, {stream::kPoly, 77});
    std::vector<FieldElement> xs(size_t(k_), field_->zero());
    for (uint64_t t = 0; t < budget; ++t) {
        for (auto& x : xs) x = field_->element(rng.below(field_->order()));
        if (!eval_(xs).is_zero()) {
            certified_ = true;
            return true;
        }
    }
    return false;
}

namespace {

ZeroProbability finish(const TwistedPoly& p, uint64_t zeros, uint64_t samples, bool exact) {
    const Field& f = p.field();
    ZeroProbability z;
    z.zeros = zeros;
    z.samples = samples;
    z.fraction = double(zeros) / double(samples);
    z.exact = exact;
    if (!exact) {
        z.half_width = 1.96 * std::sqrt(z.fraction * (1 - z.fraction) / double(samples));
    }
    z.proof_bound = double(p.vars()) * double(p.degree_bound()) * double(f.twist() + 1) /
                    double(f.order());
    z.identically_zero = zeros == samples;
    z.within_bound = z.identically_zero || z.fraction <= z.proof_bound;
    return z;
}

}  // namespace

ZeroProbability zero_probability_exact(const TwistedPoly& p) {
    const Field& f = p.field();
    const uint64_t q = f.order();
    double points = std::pow(double(q), p.vars());
    if (points > double(1 << 24)) {
        throw capacity_error("zero_probability_exact: q^k capped at 2^24 points");
    }
    uint64_t total = 1;
    for (int v = 0; v < p.vars(); ++v) total *= q;
    std::vector<FieldElement> xs(size_t(p.vars()), f.zero());
    uint64_t zeros = 0;
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t rest = idx;
        for (int v = 0; v < p.vars(); ++v) {
            xs[size_t(v)] = f.element(rest % q);
            rest /= q;
        }
        if (p.eval(xs).is_zero()) ++zeros;
    }
    return finish(p, zeros, total, true);
}

ZeroProbability zero_probability_sampled(const TwistedPoly& p, uint64_t samples, uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("zero_probability_sampled: empty budget");
    const Field& f = p.field();
    Rng rng = Rng::derive(seed, {stream::kPoly, uint64_t(p.vars())});
    std::vector<FieldElement> xs(size_t(p.vars()), f.zero());
    uint64_t zeros = 0;
    for (uint64_t t = 0; t < samples; ++t) {
        for (auto& x : xs) x = f.element(rng.below(f.order()));
        if (p.eval(xs).is_zero()) ++zeros;
    }
    return finish(p, zeros, samples, false);
}

// ----------------------------------------------- word coefficient bridge --

namespace {

// The cleared-factor pipeline runs over two rings: field elements (values)
// and per-variable degree bounds (add = max, mul = sum). Both only need
// ring operations and the constants zero/one.

struct FieldRing {
    const Field* f;
    using Element = FieldElement;
    Element zero() const { return f->zero(); }
    Element one() const { return f->one(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
};

struct DegreeRing {
    int nvars;
    using Element = std::vector<int>;
    Element zero() const { return Element(size_t(nvars), 0); }
    Element one() const { return Element(size_t(nvars), 0); }
    Element add(const Element& a, const Element& b) const {
        Element r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
        return r;
    }
    Element mul(const Element& a, const Element& b) const {
        Element r(a.size());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
};

template <typename Ring>
using Mat = std::array<typename Ring::Element, 16>;

template <typename Ring>
Mat<Ring> mat_mul(const Ring& r, const Mat<Ring>& a, const Mat<Ring>& b) {
    Mat<Ring> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            typename Ring::Element acc = r.zero();
            for (int k = 0; k < 4; ++k) {
                acc = r.add(acc, r.mul(a[size_t(i * 4 + k)], b[size_t(k * 4 + j)]));
            }
            out[size_t(i * 4 + j)] = acc;
        }
    }
    return out;
}

// T M^t T: reverse both indices. Inverts symplectic matrices, and the
// clearing scalar of a cleared factor carries over unchanged.
template <typename Ring>
Mat<Ring> mat_antitranspose(const Mat<Ring>& a) {
    Mat<Ring> out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[size_t(i * 4 + j)] = a[size_t((3 - j) * 4 + (3 - i))];
    return out;
}

template <typename Ring>
struct ParamPair {
    typename Ring::Element v, vt;  // value and its theta-image
};

// u(alpha^theta, beta^theta, alpha, beta) with the theta-images supplied.
template <typename Ring>
Mat<Ring> u_mat(const Ring& r, const ParamPair<Ring>& alpha, const ParamPair<Ring>& beta) {
    Mat<Ring> m;
    for (auto& e : m) e = r.zero();
    auto one = r.one();
    m[0] = one;
    m[5] = one;
    m[10] = one;
    m[15] = one;
    m[4] = alpha.v;
    m[8] = r.add(r.mul(alpha.v, alpha.vt), beta.v);
    m[9] = alpha.vt;
    m[12] = r.add(r.add(r.mul(r.mul(alpha.v, alpha.v), alpha.vt), r.mul(alpha.v, beta.v)),
                  beta.vt);
    m[13] = beta.v;
    m[14] = alpha.v;
    return m;
}

// gamma^(theta+1) * U(alpha,beta) D(gamma) T U(alpha2,beta2): polynomial in
// the five parameters and their theta-images. Also emits the clearing
// scalar gamma^(theta+1) itself.
template <typename Ring>
void cleared_big_cell(const Ring& r, const std::array<ParamPair<Ring>, 5>& p, Mat<Ring>* out,
                      typename Ring::Element* clearing) {
    const auto& alpha = p[0];
    const auto& beta = p[1];
    const auto& gamma = p[2];
    const auto& alpha2 = p[3];
    const auto& beta2 = p[4];
    Mat<Ring> u = u_mat(r, alpha, beta);
    // gamma^(theta+1) D(gamma) = diag(gt^2 g^2, gt g^2, gt, 1)
    auto g2 = r.mul(gamma.v, gamma.v);
    std::array<typename Ring::Element, 4> diag{r.mul(r.mul(gamma.vt, gamma.vt), g2),
                                               r.mul(gamma.vt, g2), gamma.vt, r.one()};
    Mat<Ring> scaled;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            scaled[size_t(i * 4 + j)] = r.mul(u[size_t(i * 4 + j)], diag[size_t(j)]);
        }
    }
    Mat<Ring> flipped;  // right-multiply by T: reverse columns
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) flipped[size_t(i * 4 + j)] = scaled[size_t(i * 4 + 3 - j)];
    *out = mat_mul(r, flipped, u_mat(r, alpha2, beta2));
    *clearing = r.mul(gamma.vt, gamma.v);
}

// Characteristic coefficient c_i over characteristic 2 (no signs).
template <typename Ring>
typename Ring::Element char_coeff(const Ring& r, const Mat<Ring>& m, int which) {
    auto e = [&](int i, int j) { return m[size_t(i * 4 + j)]; };
    if (which == 1) {
        return r.add(r.add(e(0, 0), e(1, 1)), r.add(e(2, 2), e(3, 3)));
    }
    if (which == 2) {
        auto acc = r.zero();
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                acc = r.add(acc, r.add(r.mul(e(i, i), e(j, j)), r.mul(e(i, j), e(j, i))));
            }
        }
        return acc;
    }
    if (which == 3) {
        auto acc = r.zero();
        static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (const auto& t : triples) {
            int i = t[0], j = t[1], k = t[2];
            auto det3 = r.add(
                r.add(r.mul(e(i, i), r.add(r.mul(e(j, j), e(k, k)), r.mul(e(j, k), e(k, j)))),
                      r.mul(e(i, j), r.add(r.mul(e(j, i), e(k, k)), r.mul(e(j, k), e(k, i))))),
                r.mul(e(i, k), r.add(r.mul(e(j, i), e(k, j)), r.mul(e(j, j), e(k, i)))));
            acc = r.add(acc, det3);
        }
        return acc;
    }
    throw std::invalid_argument("char_coeff: coefficient index must be 1, 2 or 3");
}

template <typename Ring>
typename Ring::Element word_poly_value(const Ring& r, const Word& w, int which,
                                       const typename Ring::Element& x_target,
                                       const std::array<ParamPair<Ring>, 5>& pa,
                                       const std::array<ParamPair<Ring>, 5>& pb) {
    Mat<Ring> ma, mb;
    typename Ring::Element ta = r.zero(), tb = r.zero();
    cleared_big_cell(r, pa, &ma, &ta);
    cleared_big_cell(r, pb, &mb, &tb);
    const std::array<Mat<Ring>, 4> letters{ma, mat_antitranspose<Ring>(ma), mb,
                                           mat_antitranspose<Ring>(mb)};

    Mat<Ring> acc;
    for (auto& e : acc) e = r.zero();
    acc[0] = r.one();
    acc[5] = r.one();
    acc[10] = r.one();
    acc[15] = r.one();
    typename Ring::Element clearing = r.one();
    for (size_t pos = 0; pos < w.size(); ++pos) {
        uint8_t li = uint8_t(w.at(pos));
        acc = mat_mul(r, acc, letters[li]);
        clearing = r.mul(clearing, li < 2 ? ta : tb);
    }
    auto c = char_coeff(r, acc, which);
    auto f_pow = r.one();
    for (int i = 0; i < which; ++i) f_pow = r.mul(f_pow, clearing);
    return r.add(c, r.mul(x_target, f_pow));
}

}  // namespace

TwistedPoly word_coefficient_poly(const Field& f, const Word& w, int i, FieldElement x_target) {
    if (w.empty()) throw std::invalid_argument("word_coefficient_poly: word must be nontrivial");
    if (i < 1 || i > 3) throw std::invalid_argument("word_coefficient_poly: i must be 1, 2 or 3");
    if (!x_target.field().same(f)) {
        throw std::invalid_argument("word_coefficient_poly: target from the wrong field");
    }

    TwistedPoly p;
    p.field_ = &f;
    p.k_ = 10;

    // degree bounds via the same pipeline over the degree ring
    {
        DegreeRing dr{20};
        std::array<ParamPair<DegreeRing>, 5> pa, pb;
        for (int j = 0; j < 5; ++j) {
            pa[size_t(j)].v = dr.zero();
            pa[size_t(j)].v[size_t(j)] = 1;
            pa[size_t(j)].vt = dr.zero();
            pa[size_t(j)].vt[size_t(10 + j)] = 1;
            pb[size_t(j)].v = dr.zero();
            pb[size_t(j)].v[size_t(5 + j)] = 1;
            pb[size_t(j)].vt = dr.zero();
            pb[size_t(j)].vt[size_t(15 + j)] = 1;
        }
        p.bounds_ = word_poly_value(dr, w, i, dr.zero(), pa, pb);
    }

    p.eval_ = [&f, w, i, x_target](std::span<const FieldElement> xs) {
        FieldRing r{&f};
        std::array<ParamPair<FieldRing>, 5> pa, pb;
        for (int j = 0; j < 5; ++j) {
            pa[size_t(j)].v = xs[size_t(j)];
            pa[size_t(j)].vt = xs[size_t(j)].theta();
            pb[size_t(j)].v = xs[size_t(5 + j)];
            pb[size_t(j)].vt = xs[size_t(5 + j)].theta();
        }
        return word_poly_value(r, w, i, x_target, pa, pb);
    };

    if (!x_target.is_zero()) {
        // witness point a = b = T: every characteristic coefficient is zero
        // there, so P evaluates to x_target itself.
        std::vector<FieldElement> tt(10, f.zero());
        tt[2] = f.one();
        tt[7] = f.one();
        if (!(p.eval_(tt) == x_target)) {
            throw internal_error("word_coefficient_poly: witness point check failed");
        }
        p.certified_ = true;
    }
    return p;
}

WitnessSearch word_law_witness(const Field& f, const Word& w, int attempts, uint64_t seed) {
    if (w.empty()) throw std::invalid_argument("word_law_witness: word must be nontrivial");
    Rng rng = Rng::derive(seed, {stream::kWitness, fnv1a64(w.str())});
    SuzukiOps ops{&f};
    WitnessSearch res;
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        SuzukiElement a = sample_big_cell(f, rng);
        SuzukiElement b = sample_big_cell(f, rng);
        ++res.attempts_used;
        if (!evaluate_word(ops, w, a, b).is_identity()) {
            res.found = true;
            res.pair = {a, b};
            return res;
        }
    }
    return res;
}

}  // namespace szlab
