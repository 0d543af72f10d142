#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "szlab/polycount.hpp"
#include "szlab/rng.hpp"

using namespace szlab;

namespace {

uint64_t twisted_count_exhaustive(const BiPoly& p) {
    const Field& f = p.field();
    uint64_t n = 0;
    for (uint64_t x = 0; x < f.order(); ++x) {
        FieldElement e = f.element(x);
        if (p.eval(e, e.theta()).is_zero()) ++n;
    }
    return n;
}

BiPoly bipoly(const Field& f, int dx, int dy, std::vector<uint32_t> coeffs) {
    return BiPoly::from_coeff_bits(f, dx, dy, coeffs);
}

}  // namespace

TEST_CASE("twisted root counts on fixed polynomials over GF(8)") {
    Field f(3);  // theta = 4

    // p = y: only x = 0 (x^theta = 0 iff x = 0)
    CHECK(twisted_root_count(bipoly(f, 0, 1, {0, 1})) == 1);

    // p = y + x^2: x^4 + x^2 = x^2 (x+1)^2, distinct roots {0, 1}
    CHECK(twisted_root_count(bipoly(f, 2, 1, {0, 1, 0, 0, 1, 0})) == 2);

    // p = x + y: x^theta = x exactly on the prime field
    CHECK(twisted_root_count(bipoly(f, 1, 1, {0, 1, 1, 0})) == 2);

    // collapse: p = y + x^4 has x^4 + x^4 = 0, every point is a solution
    BiPoly collapse = bipoly(f, 4, 1, {0, 1, 0, 0, 0, 0, 0, 0, 1, 0});
    CHECK(twisted_root_count(collapse) == 8);
    CHECK(twisted_count_exhaustive(collapse) == 8);

    CHECK_THROWS_AS(twisted_root_count(bipoly(f, 0, 0, {0})), std::invalid_argument);
}

TEST_CASE("constructed factor witness") {
    Field f(5);
    // p = (x + c) * y with c != 0: zeros at x = c and x = 0
    FieldElement c = f.generator();
    BiPoly p = bipoly(f, 1, 1, {0, c.bits(), 0, 1});
    CHECK(twisted_root_count(p) == 2);
    CHECK(twisted_count_exhaustive(p) == 2);
}

TEST_CASE("twisted root count agrees with exhaustive evaluation") {
    for (int m : {3, 5, 9}) {
        Field f(m);
        Rng rng{uint64_t(40 + m)};
        for (int trial = 0; trial < 100; ++trial) {
            int d = 1 + int(rng.below(4));
            BiPoly p = BiPoly::random_nonzero(f, d, rng);
            CHECK(twisted_root_count(p) == twisted_count_exhaustive(p));
        }
    }
}

TEST_CASE("harder twist audit stays under 2d^2") {
    Field f8(3), f32(5);
    auto a1 = harder_twist_audit(f8, 1, 500, 7, true);
    CHECK(a1.ok);
    CHECK(a1.max_count <= 2);
    CHECK(a1.samples == 500);
    auto a2 = harder_twist_audit(f32, 2, 300, 7, true);
    CHECK(a2.ok);
    CHECK(a2.max_count <= 8);
    auto a3 = harder_twist_audit(f8, 4, 200, 7, true);
    CHECK(a3.ok);  // bound 32 >= q, never violated, counts still cross-check
}

TEST_CASE("dense twisted polynomials and exact zero fractions") {
    Field f(3);

    // P = x1^2 + x1^theta: zero set {0, 1}, fraction 1/4
    // layout: digit 0 = exponent of x1, digit 1 = exponent of x1^theta
    std::vector<uint32_t> c1(9, 0);
    c1[2] = 1;  // x1^2
    c1[3] = 1;  // x1^theta
    TwistedPoly p1 = TwistedPoly::from_dense(f, 1, 2, c1);
    auto z1 = zero_probability_exact(p1);
    CHECK(z1.fraction == doctest::Approx(0.25));
    CHECK(z1.proof_bound == doctest::Approx(1 * 2 * 5 / 8.0));
    CHECK(z1.within_bound);
    CHECK(!z1.identically_zero);
    CHECK(p1.degree_bounds() == std::vector<int>{2, 1});

    // P = x1: fraction 1/q
    std::vector<uint32_t> c2(4, 0);
    c2[1] = 1;
    auto z2 = zero_probability_exact(TwistedPoly::from_dense(f, 1, 1, c2));
    CHECK(z2.fraction == doctest::Approx(1.0 / 8));
    CHECK(z2.within_bound);

    // P = x1 + (x1^theta)^2 = x + x^8: identically zero on GF(8) although
    // the coefficient table is nonzero
    std::vector<uint32_t> c3(9, 0);
    c3[1] = 1;  // x1
    c3[6] = 1;  // (x1^theta)^2
    TwistedPoly p3 = TwistedPoly::from_dense(f, 1, 2, c3);
    auto z3 = zero_probability_exact(p3);
    CHECK(z3.identically_zero);
    CHECK(!p3.certify(200, 99));
}

TEST_CASE("random certified-nonzero polynomials respect the explicit bound") {
    for (int m : {3, 5}) {
        Field f(m);
        Rng rng{uint64_t(60 + m)};
        for (int k = 1; k <= 2; ++k) {
            for (int d = 1; d <= 3; ++d) {
                for (int trial = 0; trial < 50; ++trial) {
                    TwistedPoly p = TwistedPoly::random_dense(f, k, d, rng);
                    auto z = zero_probability_exact(p);
                    if (!z.identically_zero) CHECK(z.within_bound);
                }
            }
        }
    }
}

TEST_CASE("sampled zero probability is deterministic and near the exact value") {
    Field f(5);
    Rng rng(3);
    TwistedPoly p = TwistedPoly::random_dense(f, 2, 2, rng);
    auto exact = zero_probability_exact(p);
    auto s1 = zero_probability_sampled(p, 20000, 9);
    auto s2 = zero_probability_sampled(p, 20000, 9);
    CHECK(s1.zeros == s2.zeros);
    CHECK(std::abs(s1.fraction - exact.fraction) <= std::max(3 * s1.half_width, 1e-3));
}

TEST_CASE("word coefficient polynomial matches the matrix route") {
    Field f(3);
    Rng rng(11);
    FieldElement x_target = f.generator();

    for (const char* text : {"a", "ab", "abAB", "aba", "Ab"}) {
        Word w = Word::parse(text);
        for (int i = 1; i <= 3; ++i) {
            TwistedPoly p = word_coefficient_poly(f, w, i, x_target);
            CHECK(p.certified_nonzero());
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<FieldElement> xs(10, f.zero());
                for (auto& x : xs) x = f.element(rng.below(8));
                xs[2] = f.element(1 + rng.below(7));  // nonzero gammas so the
                xs[7] = f.element(1 + rng.below(7));  // group elements exist
                SuzukiElement a = SuzukiElement::assemble(
                    BruhatParams::big_cell(xs[0], xs[1], xs[2], xs[3], xs[4]));
                SuzukiElement b = SuzukiElement::assemble(
                    BruhatParams::big_cell(xs[5], xs[6], xs[7], xs[8], xs[9]));
                SuzukiOps ops{&f};
                SuzukiElement val = evaluate_word(ops, w, a, b);
                FieldElement ci = charpoly_coeffs(val.matrix())[size_t(i - 1)];
                // clearing factor: per-letter gamma^(theta+1)
                FieldElement clear = f.one();
                for (size_t pos = 0; pos < w.size(); ++pos) {
                    FieldElement g = uint8_t(w.at(pos)) < 2 ? xs[2] : xs[7];
                    clear = clear * g.theta() * g;
                }
                FieldElement f_pow = f.one();
                for (int e = 0; e < i; ++e) f_pow = f_pow * clear;
                CHECK(p.eval(xs) == f_pow * (ci + x_target));
            }
        }
    }
}

TEST_CASE("word polynomial vanishes nowhere certified and flags x=0") {
    Field f(3);
    Word w = Word::parse("ab");
    TwistedPoly certified = word_coefficient_poly(f, w, 1, f.one());
    CHECK(certified.certified_nonzero());
    TwistedPoly uncertified = word_coefficient_poly(f, w, 1, f.zero());
    CHECK(!uncertified.certified_nonzero());
    CHECK_THROWS_AS(word_coefficient_poly(f, Word{}, 1, f.one()), std::invalid_argument);

    // at the point encoding a = b = T all three coefficients vanish
    std::vector<FieldElement> tt(10, f.zero());
    tt[2] = f.one();
    tt[7] = f.one();
    for (int i = 1; i <= 3; ++i) {
        TwistedPoly p = word_coefficient_poly(f, Word::parse("abaB"), i, f.zero());
        CHECK(p.eval(tt).is_zero());
    }
}

TEST_CASE("tracked degree bound dominates the interpolated degree") {
    // Restrict P to the gamma variable of a over GF(512) and interpolate the
    // resulting univariate polynomial exactly; its true degree must stay
    // under bounds[2] + theta * bounds[12].
    Field f(9);
    const uint64_t q = f.order();
    Word w = Word::parse("ab");
    TwistedPoly p = word_coefficient_poly(f, w, 1, f.one());

    Rng rng(5);
    std::vector<FieldElement> xs(10, f.zero());
    for (auto& x : xs) x = f.element(rng.below(q));
    xs[7] = f.element(1 + rng.below(q - 1));

    std::vector<FieldElement> values;
    values.reserve(q);
    for (uint64_t t = 0; t < q; ++t) {
        xs[2] = f.element(t);
        values.push_back(p.eval(xs));
    }

    // Lagrange over all of F_q: with M(X) = X^q - X, M'(r) = 1, and
    // M(X)/(X - r) = 1 + sum_i r^i X^(q-1-i), the coefficient of X^j is
    // sum_r v_r r^(q-1-j) for j >= 1 and sum_r v_r (r^(q-1) + 1) for j = 0.
    std::vector<uint32_t> coeff(q, 0);
    for (uint64_t r = 0; r < q; ++r) {
        FieldElement vr = values[r];
        if (vr.is_zero()) continue;
        FieldElement rp = f.one();  // r^(q-1-j) built from j = q-1 downward
        FieldElement re = f.element(r);
        for (uint64_t j = q - 1; j >= 1; --j) {
            coeff[j] ^= (vr * rp).bits();
            rp = rp * re;
        }
        coeff[0] ^= (vr * (rp + f.one())).bits();
    }
    int actual_degree = -1;
    for (uint64_t j = 0; j < q; ++j) {
        if (coeff[j]) actual_degree = int(j);
    }
    // spot-check the interpolation itself
    UniPoly interp = UniPoly::from_coeff_bits(f, coeff);
    for (uint64_t t = 0; t < q; t += 37) {
        CHECK(interp.eval(f.element(t)) == values[t]);
    }

    int tracked = p.degree_bounds()[2] + int(f.twist()) * p.degree_bounds()[12];
    CHECK(actual_degree >= 1);
    CHECK(actual_degree <= tracked);
}

TEST_CASE("word law witness search") {
    Field f(3);
    auto res = word_law_witness(f, Word::parse("a"), 50, 1);
    CHECK(res.found);
    CHECK(res.attempts_used == 1);

    res = word_law_witness(f, Word::parse("abAB"), 50, 1);
    CHECK(res.found);
    CHECK(res.attempts_used <= 3);
    SuzukiOps ops{&f};
    auto [a, b] = *res.pair;
    CHECK(!evaluate_word(ops, Word::parse("abAB"), a, b).is_identity());

    // exponent of Sz(2) is 20: a^20 is a law there, so the search must
    // come back inconclusive rather than claim a witness
    Field f2(1);
    auto law = word_law_witness(f2, Word::parse("a").pow(20), 25, 1);
    CHECK(!law.found);
    CHECK(law.attempts_used == 25);

    CHECK_THROWS_AS(word_law_witness(f, Word{}, 5, 1), std::invalid_argument);
}
