#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "szlab/common.hpp"

namespace szlab {

class Field;

/// Element of GF(2^m): the residue polynomial packed little-endian into a
/// machine word (bit i = coefficient of X^i). Immutable value type; carries
/// a pointer to its field, and mixing fields in an operation throws.
class FieldElement {
public:
    FieldElement() = default;

    uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }
    const Field& field() const;

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    bool operator==(const FieldElement& rhs) const = default;

    FieldElement square() const;
    FieldElement pow(uint64_t e) const;
    /// Multiplicative inverse via x^(q-2); throws on zero.
    FieldElement inv() const;
    /// The twist map x -> x^(2^(n+1)), computed by n+1 squarings. A field
    /// automorphism whose square is Frobenius: theta(theta(x)) = x^2.
    FieldElement theta() const;

private:
    friend class Field;
    FieldElement(uint32_t bits, const Field* f) : bits_(bits), field_(f) {}

    uint32_t bits_ = 0;
    const Field* field_ = nullptr;
};

/// GF(2^m) for odd m, 1 <= m <= 31, with q = 2^m and the twist exponent
/// theta = 2^((m+1)/2). The modulus is the lexicographically least
/// irreducible degree-m polynomial over GF(2) with nonzero constant term,
/// found and verified constructively at construction, so element bit
/// patterns are reproducible across runs and machines.
///
/// Fields are pinned in memory (non-copyable): elements refer to them by
/// pointer and must not outlive them.
class Field {
public:
    static constexpr int kMaxDegree = 31;
    static constexpr int kTableMaxDegree = 16;

    explicit Field(int m);
    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int degree() const { return m_; }                    // m
    uint64_t order() const { return 1ull << m_; }        // q
    int twist_log() const { return (m_ + 1) / 2; }       // n+1 where m = 2n+1
    uint64_t twist() const { return 1ull << twist_log(); }  // theta
    uint64_t modulus() const { return modulus_; }

    FieldElement zero() const { return {0u, this}; }
    FieldElement one() const { return {1u, this}; }
    /// The class of X (of 1 when m = 1, where X reduces to 1 mod X+1).
    FieldElement generator() const { return {m_ == 1 ? 1u : 2u, this}; }
    FieldElement element(uint64_t bits) const;

    /// Fields constructed with equal m are interchangeable (the modulus is
    /// deterministic); elements compare their fields through this.
    bool same(const Field& other) const {
        return m_ == other.m_ && modulus_ == other.modulus_;
    }

    /// True iff poly (bit-packed, degree = `degree`) is irreducible over
    /// GF(2): gcd(X^(2^i) - X, poly) = 1 for 1 <= i <= degree/2.
    static bool is_irreducible(uint64_t poly, int degree);

    uint32_t mul_bits(uint32_t a, uint32_t b) const;
    uint32_t pow_bits(uint32_t a, uint64_t e) const;

private:
    void build_tables();

    int m_ = 0;
    uint64_t modulus_ = 0;
    // log/exp tables for m <= kTableMaxDegree; exp_ has length 2(q-1) so the
    // sum of two logs indexes it without a reduction.
    std::vector<uint32_t> exp_;
    std::vector<int32_t> log_;
};

/// Univariate polynomial over a Field, canonical (no trailing zero
/// coefficients; the zero polynomial has degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Field& f) : field_(&f) {}

    static UniPoly from_coeff_bits(const Field& f, std::span<const uint32_t> coeffs);
    static UniPoly constant(FieldElement c);
    static UniPoly x_power(const Field& f, int k);  // X^k

    const Field& field() const;
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    FieldElement coeff(int i) const;
    FieldElement leading() const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator%(const UniPoly& rhs) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& rhs) const;
    UniPoly monic() const;
    bool operator==(const UniPoly& rhs) const { return field_same(rhs) && c_ == rhs.c_; }

    FieldElement eval(FieldElement x) const;

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);

private:
    bool field_same(const UniPoly& rhs) const;
    void trim();

    const Field* field_ = nullptr;
    std::vector<uint32_t> c_;  // c_[i] = coefficient bits of X^i
};

/// Number of distinct roots of f in its field: deg gcd(f, X^q - X), with
/// X^q mod f obtained by repeated squaring. Throws on the zero polynomial
/// (every point is a root).
int count_roots(const UniPoly& f);

/// All distinct roots of f in its field, sorted by bit pattern.
/// Deterministic Berlekamp-trace splitting.
std::vector<FieldElement> find_roots(const UniPoly& f);

/// The field homomorphism GF(2^m0) -> GF(2^m) for m0 | m, determined by
/// sending the subfield generator to the least root of the subfield modulus
/// in the big field. Its image is exactly {x : x^(2^m0) = x}, and for odd
/// m0, m it intertwines the two twist maps.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(const Field& sub, const Field& big);

    const Field& sub() const { return *sub_; }
    const Field& big() const { return *big_; }
    FieldElement root() const { return root_; }

    FieldElement map(FieldElement x) const;
    bool in_image(FieldElement y) const;

private:
    const Field* sub_;
    const Field* big_;
    FieldElement root_;
    std::vector<FieldElement> root_powers_;  // root^i, i < m0
};

/// True iff x lies in some proper subfield of its field.
bool in_proper_subfield(FieldElement x);

/// |union of all proper subfields of GF(2^m)| by inclusion-exclusion over
/// the divisors of m.
uint64_t proper_subfield_union_size(int m);

}  // namespace szlab
