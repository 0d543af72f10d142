#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "szlab/rng.hpp"
#include "szlab/suzuki.hpp"

using namespace szlab;

namespace {

uint64_t matrix_fingerprint(const Matrix4& m) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            h ^= m.bits_at(r, c) + 0x9e3779b9u;
            h *= 0x100000001b3ull;
        }
    }
    return h;
}

BruhatParams random_params(const Field& f, Rng& rng) {
    FieldElement al = f.element(rng.below(f.order()));
    FieldElement be = f.element(rng.below(f.order()));
    FieldElement ga = f.element(1 + rng.below(f.order() - 1));
    if (rng.below(65) == 0) return BruhatParams::borel(al, be, ga);
    FieldElement a2 = f.element(rng.below(f.order()));
    FieldElement b2 = f.element(rng.below(f.order()));
    return BruhatParams::big_cell(al, be, ga, a2, b2);
}

}  // namespace

TEST_CASE("basic matrix shapes") {
    Field f(3);
    FieldElement z = f.zero(), o = f.one();

    CHECK(u_matrix(z, z, z, z) == Matrix4::identity(f));
    CHECK(d_matrix(o, o) == Matrix4::identity(f));
    CHECK_THROWS_AS(d_matrix(z, o), std::invalid_argument);
    CHECK_THROWS_AS(d_matrix(o, z), std::invalid_argument);

    Matrix4 t = t_matrix(f);
    CHECK(t * t == Matrix4::identity(f));
    CHECK(big_u(z, z) == Matrix4::identity(f));
}

TEST_CASE("big_d is multiplicative and big_u is closed under products") {
    Field f(3);
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        FieldElement g1 = f.element(1 + rng.below(7));
        FieldElement g2 = f.element(1 + rng.below(7));
        CHECK(big_d(g1) * big_d(g2) == big_d(g1 * g2));
    }
    for (uint64_t a = 0; a < 8; ++a) {
        for (uint64_t b = 0; b < 8; ++b) {
            Matrix4 prod = big_u(f.element(a), f.zero()) * big_u(f.zero(), f.element(b));
            auto p = factorize(prod);
            REQUIRE(p.has_value());
            CHECK(p->cell == BruhatParams::Cell::kBorel);
            CHECK(p->gamma.is_one());
        }
    }
}

TEST_CASE("assemble hits the expected matrices") {
    Field f(3);
    CHECK(SuzukiElement::identity(f).matrix() == Matrix4::identity(f));
    CHECK(SuzukiElement::t_element(f).matrix() == t_matrix(f));
}

TEST_CASE("factorize o assemble is the identity on parameters") {
    Field f8(3);
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        BruhatParams p = random_params(f8, rng);
        auto q = factorize(SuzukiElement::assemble(p).matrix());
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
    Field f32(5);
    for (int i = 0; i < 1000; ++i) {
        BruhatParams p = random_params(f32, rng);
        auto q = factorize(SuzukiElement::assemble(p).matrix());
        REQUIRE(q.has_value());
        CHECK(*q == p);
    }
}

TEST_CASE("factorize recognizes non-members") {
    Field f(3);
    CHECK(factorize(Matrix4::identity(f))->cell == BruhatParams::Cell::kBorel);
    CHECK(factorize(t_matrix(f))->cell == BruhatParams::Cell::kBig);

    // untwisted unipotent: a = 1 but alpha = 0 violates a = alpha^theta
    Matrix4 untwisted = u_matrix(f.one(), f.zero(), f.zero(), f.zero());
    CHECK(!factorize(untwisted).has_value());

    // and it is absent from the full enumeration
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);
    bool present = false;
    for (uint64_t i = 0; i < idx.size(); ++i) {
        if (idx.element_at(i).matrix() == untwisted) present = true;
    }
    CHECK(!present);

    // a diagonal matrix outside the twisted torus
    Matrix4 diag(f);
    diag.set(0, 0, f.generator());
    diag.set(1, 1, f.one());
    diag.set(2, 2, f.one());
    diag.set(3, 3, f.one());
    CHECK(!factorize(diag).has_value());
    CHECK(!is_symplectic(diag));
}

TEST_CASE("group law, inverses, associativity") {
    Field f(3);
    Rng rng(2);
    SuzukiElement id = SuzukiElement::identity(f);
    SuzukiElement t = SuzukiElement::t_element(f);
    CHECK(t * t == id);
    for (int i = 0; i < 1000; ++i) {
        SuzukiElement g = sample_uniform(f, rng);
        CHECK(g * g.inversed() == id);
        CHECK(g.inversed() * g == id);
    }
    for (int i = 0; i < 1000; ++i) {
        SuzukiElement g = sample_uniform(f, rng);
        SuzukiElement h = sample_uniform(f, rng);
        SuzukiElement k = sample_uniform(f, rng);
        CHECK((g * h) * k == g * (h * k));
    }
}

TEST_CASE("order formulas") {
    CHECK(group_order(3) == 29120);
    CHECK(borel_order(3) == 448);
    CHECK(group_order(1) == 20);
    CHECK(group_order(5) == 32537600);
    for (int m : {1, 3, 5, 7}) {
        u128 q = u128(1) << m;
        CHECK(group_order(m) % borel_order(m) == 0);
        CHECK(group_order(m) / borel_order(m) == q * q + 1);
    }
    CHECK_THROWS_AS(group_order(4), std::invalid_argument);
    CHECK_THROWS_AS(group_order(27), capacity_error);
}

TEST_CASE("enumeration: counts, distinct matrices, symplectic condition") {
    Field f2(1);
    GroupIndex idx2 = GroupIndex::enumerate(f2, GroupIndex::Mode::kFull);
    CHECK(idx2.size() == 20);
    std::unordered_set<uint64_t> hashes;
    for (uint64_t i = 0; i < idx2.size(); ++i) {
        const SuzukiElement& g = idx2.element_at(i);
        hashes.insert(matrix_fingerprint(g.matrix()));
        CHECK(is_symplectic(g.matrix()));
        CHECK(det(g.matrix()).is_one());
    }
    CHECK(hashes.size() == 20);

    Field f8(3);
    GroupIndex idx8 = GroupIndex::enumerate(f8, GroupIndex::Mode::kFull);
    CHECK(idx8.size() == 29120);
    // index round trip
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        uint64_t k = rng.below(idx8.size());
        auto back = idx8.index_of(idx8.params_at(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
}

TEST_CASE("group index cache file round trip") {
    Field f(1);
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);
    std::string path = "groupindex_sz2_test.bin";
    idx.save(path);
    GroupIndex loaded = GroupIndex::load(f, path);
    CHECK(loaded.size() == idx.size());
    for (uint64_t i = 0; i < idx.size(); ++i) {
        CHECK(loaded.element_at(i) == idx.element_at(i));
    }
    std::remove(path.c_str());
}

TEST_CASE("characteristic coefficients") {
    Field f(3);
    SuzukiElement t = SuzukiElement::t_element(f);
    auto ct = charpoly_coeffs(t.matrix());
    CHECK(ct[0].is_zero());
    CHECK(ct[1].is_zero());
    CHECK(ct[2].is_zero());

    // (lambda+1)^4 = lambda^4 + 1 over GF(2): the identity also gives (0,0,0)
    auto ci = charpoly_coeffs(Matrix4::identity(f));
    CHECK(ci[0].is_zero());
    CHECK(ci[1].is_zero());
    CHECK(ci[2].is_zero());

    Rng rng(9);
    for (int i = 0; i < 1000; ++i) {
        SuzukiElement g = sample_uniform(f, rng);
        SuzukiElement x = sample_uniform(f, rng);
        CHECK(charpoly_coeffs(g.matrix()) == charpoly_coeffs(conjugate(g, x).matrix()));
        // c1 = trace, c3 = trace of the inverse (det = 1)
        auto c = charpoly_coeffs(g.matrix());
        uint32_t tr = 0, tr_inv = 0;
        Matrix4 gi = g.inversed().matrix();
        for (int d = 0; d < 4; ++d) {
            tr ^= g.matrix().bits_at(d, d);
            tr_inv ^= gi.bits_at(d, d);
        }
        CHECK(c[0].bits() == tr);
        CHECK(c[2].bits() == tr_inv);
        CHECK(det(g.matrix()).is_one());
    }
}

TEST_CASE("subfield copy of Sz(2) inside Sz(8)") {
    Field f8(3), f2(1);
    SubfieldSuzuki sub(f8, f2);
    CHECK(sub.order() == 20);

    GroupIndex idx = GroupIndex::enumerate(f8, GroupIndex::Mode::kFull);
    uint64_t members = 0;
    for (uint64_t i = 0; i < idx.size(); ++i) {
        if (sub.contains(idx.element_at(i))) ++members;
    }
    CHECK(members == 20);

    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        SuzukiElement x = sub.sample(rng);
        SuzukiElement y = sub.sample(rng);
        CHECK(sub.contains(x * y));
        CHECK(sub.contains(x.inversed()));
    }
}

TEST_CASE("subfield copy of Sz(8) inside Sz(512)") {
    Field f512(9), f8(3);
    SubfieldSuzuki sub(f512, f8);
    CHECK(sub.order() == 29120);
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        SuzukiElement x = sub.sample(rng);
        SuzukiElement y = sub.sample(rng);
        CHECK(sub.contains(x * y));
    }
    // an element with a parameter outside the subfield image is rejected
    SuzukiElement outside = SuzukiElement::assemble(
        BruhatParams::borel(f512.generator(), f512.zero(), f512.one()));
    CHECK(!sub.contains(outside));
}

TEST_CASE("conjugation preserves order and the identity conjugator fixes") {
    Field f(3);
    Rng rng(11);
    SuzukiElement id = SuzukiElement::identity(f);
    for (int i = 0; i < 100; ++i) {
        SuzukiElement g = sample_uniform(f, rng);
        SuzukiElement x = sample_uniform(f, rng);
        CHECK(conjugate(g, id) == g);
        CHECK(element_order(g) == element_order(conjugate(g, x)));
    }
}

TEST_CASE("element orders land in the allowed set") {
    Field f2(1);
    GroupIndex idx = GroupIndex::enumerate(f2, GroupIndex::Mode::kFull);
    // Sz(2) is the Frobenius group of order 20: orders 1, 2, 4, 5
    std::unordered_set<uint64_t> seen;
    for (uint64_t i = 0; i < idx.size(); ++i) seen.insert(element_order(idx.element_at(i)));
    CHECK(seen == std::unordered_set<uint64_t>{1, 2, 4, 5});

    Field f8(3);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        uint64_t o = element_order(sample_uniform(f8, rng));
        bool allowed = o == 1 || o == 2 || o == 4 || o == 5 || o == 7 || o == 13;
        CHECK(allowed);
    }
    CHECK(element_order(SuzukiElement::t_element(f8)) == 2);
}

TEST_CASE("generation by closure") {
    Field f(3);
    SuzukiElement id = SuzukiElement::identity(f);
    auto res = generates(id, id, 1u << 20);
    CHECK(res.status == GenerationResult::Status::kProperSubgroup);
    CHECK(res.closure_size == 1);

    // two Borel elements generate at most the Borel subgroup
    Rng rng(17);
    SuzukiElement p = SuzukiElement::assemble(
        BruhatParams::borel(f.element(3), f.element(5), f.element(2)));
    SuzukiElement q = SuzukiElement::assemble(
        BruhatParams::borel(f.element(1), f.element(6), f.element(4)));
    res = generates(p, q, 1u << 20);
    CHECK(res.status == GenerationResult::Status::kProperSubgroup);
    CHECK(res.closure_size <= 448);

    // a random pair generates with overwhelming probability; seed fixed
    SuzukiElement a = sample_uniform(f, rng);
    SuzukiElement b = sample_uniform(f, rng);
    res = generates(a, b, 1u << 20);
    CHECK(res.status == GenerationResult::Status::kGenerates);
    CHECK(res.closure_size == 29120);

    // cap exhaustion is reported, not guessed
    res = generates(a, b, 100);
    CHECK(res.status == GenerationResult::Status::kIndeterminate);
}

TEST_CASE("uniform sampling hits the Borel coset at its exact proportion") {
    Field f(3);
    Rng rng(23);
    int borel_hits = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        if (sample_uniform(f, rng).in_borel()) ++borel_hits;
    }
    double p = 448.0 / 29120.0;
    double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(double(borel_hits) / n - p) < 5 * sigma);
}

TEST_CASE("action tables agree with multiplication") {
    Field f(3);
    GroupIndex idx = GroupIndex::enumerate(f, GroupIndex::Mode::kFull);
    Rng rng(29);
    SuzukiElement a = sample_uniform(f, rng);
    SuzukiElement b = sample_uniform(f, rng);
    auto tables = idx.action_tables(a, b);
    const std::array<SuzukiElement, 4> gens{a, a.inversed(), b, b.inversed()};
    for (int s = 0; s < 4; ++s) {
        for (int trial = 0; trial < 200; ++trial) {
            uint64_t i = rng.below(idx.size());
            SuzukiElement prod = idx.element_at(i) * gens[size_t(s)];
            CHECK(idx.element_at(tables[size_t(s)][i]) == prod);
        }
    }
}
