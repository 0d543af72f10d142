#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "szlab/field.hpp"
#include "szlab/rng.hpp"
#include "szlab/suzuki.hpp"
#include "szlab/words.hpp"

namespace szlab {

/// Bivariate polynomial over GF(2^m), dense coefficient table, canonical
/// (no zero top row or column).
class BiPoly {
public:
    /// coeffs[i * (dy+1) + j] is the coefficient of x^i y^j.
    static BiPoly from_coeff_bits(const Field& f, int dx, int dy,
                                  std::span<const uint32_t> coeffs);
    /// Uniform coefficients with per-variable degree <= d, resampled while
    /// identically zero.
    static BiPoly random_nonzero(const Field& f, int d, Rng& rng);

    const Field& field() const { return *field_; }
    int degree_x() const { return dx_; }
    int degree_y() const { return dy_; }
    uint32_t coeff_bits(int i, int j) const { return c_[size_t(i) * size_t(dy_ + 1) + size_t(j)]; }
    bool is_zero() const { return c_.empty(); }

    FieldElement eval(FieldElement x, FieldElement y) const;
    /// p(x, x^theta) as a univariate polynomial (zero if all monomials
    /// cancel after the substitution, which requires d >= theta).
    UniPoly substitute_twist() const;

private:
    const Field* field_ = nullptr;
    int dx_ = -1, dy_ = -1;
    std::vector<uint32_t> c_;
};

/// Exact number of x in F_q with p(x, x^theta) = 0, via the substitution
/// y = x^theta and distinct-root counting; q when the substitution
/// collapses to the zero polynomial. Throws on the zero polynomial.
uint64_t twisted_root_count(const BiPoly& p);

struct TwistAudit {
    uint64_t samples = 0;
    uint64_t max_count = 0;
    uint64_t bound = 0;  // 2 d^2
    uint64_t violations = 0;
    bool ok = false;
    bool cross_validated = false;
    // the polynomial attaining max_count
    int witness_dx = 0, witness_dy = 0;
    std::vector<uint32_t> witness_coeffs;
};

/// Samples nonzero bivariate polynomials of per-variable degree <= d and
/// checks twisted_root_count <= 2d^2 on each, optionally cross-validating
/// every count against full-field evaluation.
TwistAudit harder_twist_audit(const Field& f, int d, uint64_t samples, uint64_t seed,
                              bool cross_validate);

/// Black-box polynomial P(x_1..x_k, x_1^theta..x_k^theta) with tracked
/// per-variable degree bounds (values, then theta-values: 2k bounds).
/// Nonzero certification is by witness point only; without one the
/// polynomial stays flagged uncertified.
class TwistedPoly {
public:
    const Field& field() const { return *field_; }
    int vars() const { return k_; }
    const std::vector<int>& degree_bounds() const { return bounds_; }
    int degree_bound() const;
    bool certified_nonzero() const { return certified_; }

    FieldElement eval(std::span<const FieldElement> xs) const;

    /// Dense 2k-variate table; coeffs indexed mixed-radix with exponent of
    /// formal variable t as digit t (values first, then theta-values).
    static TwistedPoly from_dense(const Field& f, int k, int d, std::vector<uint32_t> coeffs);
    static TwistedPoly random_dense(const Field& f, int k, int d, Rng& rng);

    /// Tries to certify nonzeroness by sampling witness points.
    bool certify(uint64_t budget, uint64_t seed);

private:
    friend TwistedPoly word_coefficient_poly(const Field&, const Word&, int, FieldElement);
    const Field* field_ = nullptr;
    int k_ = 0;
    std::vector<int> bounds_;
    std::function<FieldElement(std::span<const FieldElement>)> eval_;
    bool certified_ = false;
};

struct ZeroProbability {
    double fraction = 0;
    double half_width = 0;  // 1.96 sigma, sampled mode only
    uint64_t zeros = 0;
    uint64_t samples = 0;
    double proof_bound = 0;  // k * d * (theta + 1) / q
    bool within_bound = false;
    bool identically_zero = false;  // vanished at every tested point
    bool exact = false;
};

/// Exact fraction of zeros over all q^k parameter points (q^k <= 2^24).
ZeroProbability zero_probability_exact(const TwistedPoly& p);
ZeroProbability zero_probability_sampled(const TwistedPoly& p, uint64_t samples, uint64_t seed);

/// The polynomial in the 10 big-cell parameters of (a, b) whose vanishing
/// encodes c_i(w(a,b)) = x_target, with the gamma denominators cleared by
/// per-letter powers of gamma^(theta+1):
///     P = c_i(cleared product) + x_target * F^i,  F = prod of clearings,
/// so at points with nonzero gammas, P = F^i (c_i(w(a,b)) + x_target).
/// For x_target != 0 the point a = b = T certifies P nonzero (all c_i
/// vanish there); for x_target = 0 the polynomial is returned uncertified.
TwistedPoly word_coefficient_poly(const Field& f, const Word& w, int i, FieldElement x_target);

struct WitnessSearch {
    bool found = false;
    int attempts_used = 0;
    std::optional<std::pair<SuzukiElement, SuzukiElement>> pair;
};

/// Searches random big-cell pairs for a witness that w is not a law, i.e.
/// w(a,b) != id. Exhausting the attempt budget is reported as inconclusive.
WitnessSearch word_law_witness(const Field& f, const Word& w, int attempts, uint64_t seed);

}  // namespace szlab
