#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "szlab/common.hpp"
#include "szlab/rng.hpp"

namespace szlab {

/// Generators of the free group F2 and their inverses. The numeric order
/// a < a^-1 < b < b^-1 is the lexicographic order used everywhere.
enum class Letter : uint8_t { A = 0, AInv = 1, B = 2, BInv = 3 };

constexpr Letter inverse(Letter l) { return Letter(uint8_t(l) ^ 1); }
constexpr char letter_char(Letter l) { return "aAbB"[uint8_t(l)]; }

/// Freely reduced word in F2. Letters are packed two bits each (four per
/// byte), so words up to 60 letters need no heap allocation.
class Word {
public:
    Word() = default;

    static Word reduce(std::span<const Letter> letters);
    /// Parses the text form: lowercase = generator, uppercase = inverse
    /// ("aB" = a b^-1). Throws on other characters.
    static Word parse(std::string_view text);

    size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }
    Letter at(size_t i) const {
        return Letter((uint8_t(packed_[i >> 2]) >> ((i & 3) * 2)) & 3);
    }
    Letter last() const { return at(n_ - 1); }

    /// Appends one letter, cancelling against the current last letter.
    void push(Letter l);
    /// Removes the last letter (word must be nonempty).
    void pop();

    Word inverse() const;
    /// Concatenation followed by free reduction: the group law of F2.
    Word operator*(const Word& rhs) const;
    Word pow(int k) const;

    std::string str() const;

    bool operator==(const Word& rhs) const = default;

private:
    std::string packed_;
    uint32_t n_ = 0;
};

/// Length-then-lexicographic order.
bool shortlex_less(const Word& lhs, const Word& rhs);

struct WordHash {
    size_t operator()(const Word& w) const;
};

/// |ball(L)| = 2*3^L - 1 in closed form.
uint64_t ball_size(int radius);

/// All reduced words of length <= radius, in length-then-lex order.
/// radius <= 14 (2*3^14 words is the supported ceiling).
std::vector<Word> ball(int radius);
void for_each_in_ball(int radius, const std::function<void(const Word&)>& fn);

/// Nontrivial words of length <= radius with one representative per
/// {w, w^-1} pair (a word and its inverse vanish together).
std::vector<Word> words_up_to_inverse(int radius);

/// Number of strings of length n over the four generators whose free
/// reduction is empty, i.e. closed walks at the root of the 4-regular tree.
/// Satisfies count^2 <= 12^n (the Kesten bound squared). n <= 12.
uint64_t count_closed_walks(int n);

// ------------------------------------------------------ generic group ops --

template <typename Ops>
concept GroupOps = requires(const Ops& ops, const typename Ops::Element& g) {
    { ops.identity() } -> std::same_as<typename Ops::Element>;
    { ops.multiply(g, g) } -> std::same_as<typename Ops::Element>;
    { ops.inverse(g) } -> std::same_as<typename Ops::Element>;
    { ops.equal(g, g) } -> std::same_as<bool>;
};

/// Image of w under a -> a, b -> b.
template <GroupOps Ops>
typename Ops::Element evaluate_word(const Ops& ops, const Word& w,
                                    const typename Ops::Element& a,
                                    const typename Ops::Element& b) {
    const std::array<typename Ops::Element, 4> gen{a, ops.inverse(a), b, ops.inverse(b)};
    typename Ops::Element acc = ops.identity();
    for (size_t i = 0; i < w.size(); ++i) {
        acc = ops.multiply(acc, gen[size_t(w.at(i))]);
    }
    return acc;
}

/// [x, y] = x^-1 y^-1 x y.
template <GroupOps Ops>
typename Ops::Element commutator(const Ops& ops, const typename Ops::Element& x,
                                 const typename Ops::Element& y) {
    return ops.multiply(ops.multiply(ops.inverse(x), ops.inverse(y)), ops.multiply(x, y));
}

/// The iterated commutator psi_l on a tuple of 2^l elements:
/// psi_0(g) = g, psi_l = [psi_{l-1}(left half), psi_{l-1}(right half)].
template <GroupOps Ops>
typename Ops::Element iterated_commutator(const Ops& ops, int l,
                                          std::span<const typename Ops::Element> tuple) {
    if (l < 0 || l > 4) throw std::invalid_argument("iterated_commutator: arity l must be in 0..4");
    if (tuple.size() != (size_t(1) << l)) {
        throw std::invalid_argument("iterated_commutator: tuple size must be 2^l");
    }
    if (l == 0) return tuple[0];
    size_t half = tuple.size() / 2;
    return commutator(ops, iterated_commutator(ops, l - 1, tuple.first(half)),
                      iterated_commutator(ops, l - 1, tuple.subspan(half)));
}

/// F2 itself as a group, for evaluating commutator maps on words.
struct FreeGroupOps {
    using Element = Word;
    Element identity() const { return {}; }
    Element multiply(const Element& x, const Element& y) const { return x * y; }
    Element inverse(const Element& x) const { return x.inverse(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
};

// ------------------------------------------------------------ tuple audit --

struct TupleAuditResult {
    bool all_vanish = false;
    std::vector<Word> violation;  // a 2^l tuple from S, empty when none found
    uint64_t commutators_evaluated = 0;
    bool sampled = false;  // true when the exhaustive check was infeasible
    size_t set_size = 0;
    int arity = 0;
};

/// Checks psi_l = id over all 2^l-tuples from S, inside F2. Falls back to
/// seeded sampling (flagged) when the exhaustive check would blow up.
TupleAuditResult tuple_vanishing_audit(std::span<const Word> s, int l,
                                       uint64_t sample_budget = 200000, uint64_t seed = 0);

// ------------------------------------------------------------------ girth --

struct GirthResult {
    bool pass = false;
    Word relation;  // shortest, lex-least violating word; empty iff pass
};

/// Pass iff no nontrivial reduced word of length <= max_len evaluates to the
/// identity at (a, b). Iterative-deepening DFS over the reduced-word tree
/// with a running product stack, so the cost is O(3^max_len) group
/// multiplications. max_len <= 10.
template <GroupOps Ops>
GirthResult girth_test(const Ops& ops, const typename Ops::Element& a,
                       const typename Ops::Element& b, int max_len) {
    if (max_len > 10) throw capacity_error("girth_test: max_len capped at 10");
    const std::array<typename Ops::Element, 4> gen{a, ops.inverse(a), b, ops.inverse(b)};
    const typename Ops::Element id = ops.identity();

    std::vector<typename Ops::Element> products{id};
    Word current;
    std::function<bool(int)> dfs = [&](int remaining) -> bool {
        if (remaining == 0) return ops.equal(products.back(), id);
        for (uint8_t li = 0; li < 4; ++li) {
            Letter l{li};
            if (!current.empty() && current.last() == szlab::inverse(l)) continue;
            current.push(l);
            products.push_back(ops.multiply(products.back(), gen[li]));
            if (dfs(remaining - 1)) return true;
            products.pop_back();
            current.pop();
        }
        return false;
    };

    for (int len = 1; len <= max_len; ++len) {
        if (dfs(len)) return {false, current};
    }
    return {true, Word{}};
}

}  // namespace szlab
