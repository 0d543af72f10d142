#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "szlab/field.hpp"
#include "szlab/rng.hpp"

using namespace szlab;

TEST_CASE("modulus selection is the least irreducible polynomial") {
    // Independent oracle: walk candidates in lexicographic order and test
    // irreducibility by trial division.
    auto least_irreducible = [](int m) {
        for (uint64_t cand = 1ull << m; cand < (2ull << m); ++cand) {
            if (oracles::irreducible_by_trial_division(cand, m)) return cand;
        }
        return uint64_t(0);
    };

    Field f3(3);
    CHECK(f3.modulus() == 0b1011);  // X^3 + X + 1
    CHECK(f3.modulus() == least_irreducible(3));

    Field f1(1);
    CHECK(f1.modulus() == 0b11);  // X + 1: X itself is excluded as a modulus

    for (int m : {5, 7, 9, 11, 13}) {
        Field f(m);
        CHECK(oracles::irreducible_by_trial_division(f.modulus(), m));
        // The only smaller irreducible candidate could be X^m + ... with a
        // zero constant term, and those are all divisible by X.
        CHECK(f.modulus() == least_irreducible(m));
    }
}

TEST_CASE("even or out-of-range degrees are rejected") {
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
    CHECK_THROWS_AS(Field(-3), std::invalid_argument);
    CHECK_THROWS_AS(Field(33), std::invalid_argument);
}

TEST_CASE("GF(8) multiplication matches the naive oracle") {
    Field f(3);
    FieldElement g = f.generator();
    CHECK((g * (g * g)).bits() == 0b011);  // g^3 = g + 1

    for (uint64_t a = 0; a < 8; ++a) {
        for (uint64_t b = 0; b < 8; ++b) {
            CHECK((f.element(a) * f.element(b)).bits() ==
                  oracles::field_mul_naive(f, uint32_t(a), uint32_t(b)));
        }
    }
}

TEST_CASE("table path agrees with the carry-less path") {
    // m = 17 has no tables; build the same products in GF(2^13) (tables)
    // against the naive oracle, then spot-check the large field.
    Field f13(13);
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        uint32_t a = uint32_t(rng.below(f13.order()));
        uint32_t b = uint32_t(rng.below(f13.order()));
        CHECK(f13.mul_bits(a, b) == oracles::field_mul_naive(f13, a, b));
    }
    Field f17(17);
    for (int i = 0; i < 200; ++i) {
        uint32_t a = uint32_t(rng.below(f17.order()));
        uint32_t b = uint32_t(rng.below(f17.order()));
        CHECK(f17.mul_bits(a, b) == oracles::field_mul_naive(f17, a, b));
    }
}

TEST_CASE("characteristic two and inverses") {
    Field f(5);
    for (uint64_t a = 0; a < f.order(); ++a) {
        FieldElement x = f.element(a);
        CHECK((x + x).is_zero());
        if (!x.is_zero()) CHECK((x * x.inv()).is_one());
    }
    CHECK_THROWS_AS(f.zero().inv(), std::invalid_argument);
}

TEST_CASE("mixed fields are rejected") {
    Field f3(3), f5(5);
    CHECK_THROWS_AS(f3.one() + f5.one(), std::invalid_argument);
    CHECK_THROWS_AS(f3.one() * f5.one(), std::invalid_argument);
    CHECK_THROWS_AS(f3.element(8), std::invalid_argument);
}

TEST_CASE("field laws: multiplicative order and ring identities") {
    for (int m : {1, 3, 5, 7, 9}) {
        Field f(m);
        for (uint64_t a = 1; a < f.order(); ++a) {
            CHECK(f.element(a).pow(f.order() - 1).is_one());
        }
    }
    Field f(9);
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        FieldElement x = f.element(rng.below(f.order()));
        FieldElement y = f.element(rng.below(f.order()));
        FieldElement z = f.element(rng.below(f.order()));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("theta is the square root of Frobenius") {
    Field f8(3);
    CHECK(f8.twist() == 4);
    CHECK(f8.generator().theta().bits() == 0b110);  // g^4 = g^2 + g
    CHECK(f8.generator().theta() == f8.generator().pow(4));

    for (int m : {1, 3, 5, 7, 9}) {
        Field f(m);
        for (uint64_t a = 0; a < f.order(); ++a) {
            FieldElement x = f.element(a);
            CHECK(x.theta().theta() == x * x);
        }
        CHECK(f.zero().theta().is_zero());
        CHECK(f.one().theta().is_one());
    }
    for (int m : {11, 13}) {
        Field f(m);
        Rng rng{uint64_t(m)};
        for (int i = 0; i < 100000; ++i) {
            FieldElement x = f.element(rng.below(f.order()));
            CHECK(x.theta().theta() == x * x);
        }
        // theta is additive and multiplicative (automorphism), sampled
        for (int i = 0; i < 1000; ++i) {
            FieldElement x = f.element(rng.below(f.order()));
            FieldElement y = f.element(rng.below(f.order()));
            CHECK((x + y).theta() == x.theta() + y.theta());
            CHECK((x * y).theta() == x.theta() * y.theta());
        }
    }
}

TEST_CASE("count_roots on fixed polynomials") {
    Field f(3);
    // X^2 + X = X(X+1): roots 0 and 1
    uint32_t c1[] = {0, 1, 1};
    CHECK(count_roots(UniPoly::from_coeff_bits(f, c1)) == 2);
    // the modulus X^3 + X + 1 splits completely in its own field
    uint32_t c2[] = {1, 1, 0, 1};
    UniPoly mod_poly = UniPoly::from_coeff_bits(f, c2);
    CHECK(count_roots(mod_poly) == 3);
    CHECK(oracles::count_roots_exhaustive(mod_poly) == 3);
    // linear X + g
    uint32_t c3[] = {2, 1};
    CHECK(count_roots(UniPoly::from_coeff_bits(f, c3)) == 1);
    CHECK_THROWS_AS(count_roots(UniPoly(f)), std::invalid_argument);
}

TEST_CASE("count_roots matches exhaustive evaluation on random polynomials") {
    for (int m : {3, 5}) {
        Field f(m);
        Rng rng(uint64_t(100 + m));
        for (int trial = 0; trial < 1000; ++trial) {
            int deg = 1 + int(rng.below(8));
            std::vector<uint32_t> coeffs(size_t(deg) + 1);
            for (auto& c : coeffs) c = uint32_t(rng.below(f.order()));
            if (coeffs.back() == 0) coeffs.back() = 1;
            UniPoly p = UniPoly::from_coeff_bits(f, coeffs);
            CHECK(count_roots(p) == oracles::count_roots_exhaustive(p));
        }
    }
}

TEST_CASE("find_roots returns exactly the exhaustive roots, sorted") {
    Field f(5);
    Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int deg = 1 + int(rng.below(6));
        std::vector<uint32_t> coeffs(size_t(deg) + 1);
        for (auto& c : coeffs) c = uint32_t(rng.below(f.order()));
        if (coeffs.back() == 0) coeffs.back() = 1;
        UniPoly p = UniPoly::from_coeff_bits(f, coeffs);
        std::vector<uint32_t> expected = oracles::roots_exhaustive(p);
        std::vector<FieldElement> got = find_roots(p);
        REQUIRE(got.size() == expected.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].bits() == expected[i]);
    }
}

TEST_CASE("subfield embedding: prime field into GF(8)") {
    Field f2(1), f8(3);
    SubfieldEmbedding emb(f2, f8);
    CHECK(emb.map(f2.zero()) == f8.zero());
    CHECK(emb.map(f2.one()) == f8.one());
    CHECK_THROWS_AS(SubfieldEmbedding(Field(3), Field(5)), std::invalid_argument);
}

TEST_CASE("subfield embedding GF(8) into GF(512)") {
    Field f8(3), f512(9);
    SubfieldEmbedding emb(f8, f512);

    // Image is exactly the fixed set of x -> x^8, of size 8.
    uint64_t fixed = 0;
    for (uint64_t x = 0; x < f512.order(); ++x) {
        FieldElement e = f512.element(x);
        if (e.pow(8) == e) ++fixed;
    }
    CHECK(fixed == 8);

    // Homomorphism, injectivity, and image membership, exhaustively.
    std::vector<FieldElement> image;
    for (uint64_t a = 0; a < 8; ++a) {
        FieldElement ma = emb.map(f8.element(a));
        CHECK(emb.in_image(ma));
        image.push_back(ma);
        for (uint64_t b = 0; b < 8; ++b) {
            FieldElement mb = emb.map(f8.element(b));
            CHECK(emb.map(f8.element(a) + f8.element(b)) == ma + mb);
            CHECK(emb.map(f8.element(a) * f8.element(b)) == ma * mb);
        }
    }
    std::sort(image.begin(), image.end(),
              [](auto& x, auto& y) { return x.bits() < y.bits(); });
    CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());

    // The embedding intertwines the two twist maps.
    for (uint64_t a = 0; a < 8; ++a) {
        FieldElement x = f8.element(a);
        CHECK(emb.map(x.theta()) == emb.map(x).theta());
    }
}

TEST_CASE("proper subfield census") {
    CHECK(proper_subfield_union_size(3) == 2);   // just GF(2)
    CHECK(proper_subfield_union_size(9) == 8);   // GF(8), which contains GF(2)
    CHECK(proper_subfield_union_size(15) == 38); // GF(8) and GF(32) overlap in GF(2)

    // Cross-check against the membership predicate, exhaustively for m = 9.
    Field f(9);
    uint64_t n = 0;
    for (uint64_t x = 0; x < f.order(); ++x) {
        if (in_proper_subfield(f.element(x))) ++n;
    }
    CHECK(n == 8);
}
