#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "szlab/rng.hpp"
#include "szlab/words.hpp"

using namespace szlab;

namespace {

// Z/n as a toy group for word evaluation.
struct CyclicOps {
    int n;
    using Element = int;
    Element identity() const { return 0; }
    Element multiply(Element x, Element y) const { return (x + y) % n; }
    Element inverse(Element x) const { return (n - x) % n; }
    bool equal(Element x, Element y) const { return x == y; }
};

Word random_unreduced(Rng& rng, int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push(Letter(rng.below(4)));
    return w;
}

bool is_power_of(const Word& w, const Word& x) {
    for (int k = -8; k <= 8; ++k) {
        if (x.pow(k) == w) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("free reduction") {
    Letter s1[] = {Letter::A, Letter::AInv, Letter::B};
    CHECK(Word::reduce(s1) == Word::parse("b"));
    CHECK(Word::reduce({}) == Word{});
    CHECK(Word::reduce({}).empty());

    // reduce is idempotent and preserves length parity
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        Word w = random_unreduced(rng, 20);
        Word again = Word::parse(w.str());
        CHECK(again == w);
        CHECK(w.size() % 2 == 0);  // 20 letters, parity preserved by cancellation
    }
}

TEST_CASE("parse and text form") {
    CHECK(Word::parse("aB").str() == "aB");
    CHECK(Word::parse("aA").empty());
    CHECK(Word::parse("abBA").empty());
    CHECK_THROWS_AS(Word::parse("axb"), std::invalid_argument);
    CHECK(Word::parse("ab").inverse().str() == "BA");
}

TEST_CASE("ball sizes and order") {
    CHECK(ball(0).size() == 1);
    CHECK(ball(1).size() == 5);
    CHECK(ball(3).size() == 53);  // 1 + 4 + 12 + 36
    for (int radius = 0; radius <= 10; ++radius) {
        uint64_t n = 0;
        for_each_in_ball(radius, [&](const Word&) { ++n; });
        CHECK(n == ball_size(radius));
    }
    auto b = ball(4);
    CHECK(std::is_sorted(b.begin(), b.end(), shortlex_less));
    CHECK_THROWS_AS(ball(15), capacity_error);
}

TEST_CASE("words up to inverse") {
    // each pair {w, w^-1} contributes one representative
    CHECK(words_up_to_inverse(8).size() == (ball_size(8) - 1) / 2);
    CHECK(words_up_to_inverse(8).size() == 6560);
    for (const Word& w : words_up_to_inverse(3)) {
        CHECK(!w.empty());
        CHECK(shortlex_less(w, w.inverse()));
    }
}

TEST_CASE("closed walk counts") {
    CHECK(count_closed_walks(0) == 1);
    CHECK(count_closed_walks(1) == 0);
    CHECK(count_closed_walks(2) == 4);
    for (int n = 1; n <= 11; n += 2) CHECK(count_closed_walks(n) == 0);

    // brute force: enumerate all 4^n strings and reduce
    for (int n = 0; n <= 10; ++n) {
        uint64_t brute = 0;
        uint64_t total = 1ull << (2 * n);
        for (uint64_t code = 0; code < total; ++code) {
            Word w;
            for (int i = 0; i < n; ++i) w.push(Letter((code >> (2 * i)) & 3));
            if (w.empty()) ++brute;
        }
        CHECK(count_closed_walks(n) == brute);
    }

    // Kesten bound, exact integers: count^2 <= 12^n
    uint64_t twelve_pow = 1;
    for (int n = 1; n <= 12; ++n) {
        twelve_pow *= 12;
        uint64_t c = count_closed_walks(n);
        CHECK(c * c <= twelve_pow);
    }
    CHECK_THROWS_AS(count_closed_walks(13), capacity_error);
}

TEST_CASE("word evaluation is a substitution homomorphism") {
    CyclicOps z12{12};
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        Word w1 = random_unreduced(rng, int(rng.below(10)));
        Word w2 = random_unreduced(rng, int(rng.below(10)));
        int a = int(rng.below(12)), b = int(rng.below(12));
        int lhs = evaluate_word(z12, w1 * w2, a, b);
        int rhs = z12.multiply(evaluate_word(z12, w1, a, b), evaluate_word(z12, w2, a, b));
        CHECK(lhs == rhs);
    }
    CHECK(evaluate_word(z12, Word{}, 5, 7) == 0);
    // commutator word at commuting elements
    CHECK(evaluate_word(z12, Word::parse("abAB"), 5, 7) == 0);
}

TEST_CASE("iterated commutators") {
    FreeGroupOps f2;
    Word a = Word::parse("a"), b = Word::parse("b");

    std::vector<Word> same{a, a};
    CHECK(iterated_commutator(f2, 1, std::span<const Word>(same)).empty());
    std::vector<Word> ab{a, b};
    CHECK(iterated_commutator(f2, 1, std::span<const Word>(ab)) == Word::parse("ABab"));

    CyclicOps z9{9};
    Rng rng(17);
    std::vector<int> tuple(8);
    for (int trial = 0; trial < 100; ++trial) {
        for (auto& g : tuple) g = int(rng.below(9));
        CHECK(iterated_commutator(z9, 3, std::span<const int>(tuple)) == 0);
    }

    std::vector<Word> wrong{a, b, a};
    CHECK_THROWS_AS(iterated_commutator(f2, 1, std::span<const Word>(wrong)),
                    std::invalid_argument);
    CHECK_THROWS_AS(iterated_commutator(f2, 5, std::span<const Word>(wrong)),
                    std::invalid_argument);
}

TEST_CASE("tuple vanishing audit") {
    // powers of a commute
    std::vector<Word> powers;
    for (int n = 1; n <= 5; ++n) powers.push_back(Word::parse("a").pow(n));
    auto res = tuple_vanishing_audit(powers, 1);
    CHECK(res.all_vanish);
    CHECK(!res.sampled);

    // free generators do not
    std::vector<Word> ab{Word::parse("a"), Word::parse("b")};
    res = tuple_vanishing_audit(ab, 1);
    CHECK(!res.all_vanish);
    REQUIRE(res.violation.size() == 2);
    FreeGroupOps f2;
    CHECK(!commutator(f2, res.violation[0], res.violation[1]).empty());

    // all words of length <= 2 that are powers of one primitive word
    std::vector<Word> s;
    for (const Word& w : ball(2)) {
        if (is_power_of(w, Word::parse("a"))) s.push_back(w);
    }
    CHECK(s.size() == 5);  // e, a, A, aa, AA
    CHECK(tuple_vanishing_audit(s, 1).all_vanish);

    // a violating 4-tuple for psi_2 is reported with provenance
    std::vector<Word> gens{Word::parse("a"), Word::parse("b"), Word::parse("ab")};
    auto res2 = tuple_vanishing_audit(gens, 2);
    CHECK(!res2.all_vanish);
    REQUIRE(res2.violation.size() == 4);
    std::vector<Word> viol = res2.violation;
    CHECK(!iterated_commutator(f2, 2, std::span<const Word>(viol)).empty());
}

TEST_CASE("commuting words share a common root (exhaustive in ball(4))") {
    FreeGroupOps f2;
    auto b4 = ball(4);
    int commuting_pairs = 0;
    for (const Word& u : b4) {
        for (const Word& v : b4) {
            if (!commutator(f2, u, v).empty()) continue;
            ++commuting_pairs;
            bool found = false;
            for (const Word& x : b4) {
                if (!x.empty() && is_power_of(u, x) && is_power_of(v, x)) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
    CHECK(commuting_pairs > int(b4.size()));
}

TEST_CASE("girth on toy groups") {
    CyclicOps z12{12};
    // a = b: the relation a b^-1 appears at length 2
    auto res = girth_test(z12, 5, 5, 4);
    CHECK(!res.pass);
    CHECK(res.relation == Word::parse("aB"));

    // involution: a^2 = id
    res = girth_test(z12, 6, 1, 4);
    CHECK(!res.pass);
    CHECK(res.relation == Word::parse("aa"));

    // 5 and 4 in Z/12: no relation of length <= 2, but b^3 = id
    res = girth_test(z12, 5, 4, 2);
    CHECK(res.pass);
    CHECK(res.relation.empty());
    res = girth_test(z12, 5, 4, 3);
    CHECK(!res.pass);
    CHECK(res.relation == Word::parse("bbb"));

    CHECK_THROWS_AS(girth_test(z12, 5, 7, 11), capacity_error);
}
