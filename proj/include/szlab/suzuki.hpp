#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "szlab/field.hpp"
#include "szlab/rng.hpp"

namespace szlab {

/// 4x4 matrix over GF(2^m), entries packed as field-element bits.
class Matrix4 {
public:
    Matrix4() = default;
    explicit Matrix4(const Field& f) : field_(&f) {}
    static Matrix4 identity(const Field& f);

    const Field& field() const;
    FieldElement at(int r, int c) const { return {field().element(e_[size_t(r * 4 + c)])}; }
    uint32_t bits_at(int r, int c) const { return e_[size_t(r * 4 + c)]; }
    void set(int r, int c, FieldElement v);

    Matrix4 operator*(const Matrix4& rhs) const;
    Matrix4 transposed() const;
    bool operator==(const Matrix4& rhs) const;

private:
    std::array<uint32_t, 16> e_{};
    const Field* field_ = nullptr;
};

/// The three matrix shapes of the explicit presentation:
///   u(a,b,alpha,beta)   lower unitriangular,
///   d(c,gamma)          diag(c*gamma, gamma, gamma^-1, gamma^-1 c^-1),
///   T                   the antidiagonal involution (1 4)(2 3).
Matrix4 u_matrix(FieldElement a, FieldElement b, FieldElement alpha, FieldElement beta);
Matrix4 d_matrix(FieldElement c, FieldElement gamma);
Matrix4 t_matrix(const Field& f);

/// The twisted specializations U(alpha,beta) = u(alpha^theta, beta^theta,
/// alpha, beta) and D(gamma) = d(gamma^theta, gamma).
Matrix4 big_u(FieldElement alpha, FieldElement beta);
Matrix4 big_d(FieldElement gamma);

/// M^t T M == T, the symplectic condition cutting out Sp4.
bool is_symplectic(const Matrix4& m);

FieldElement det(const Matrix4& m);

/// Coefficients (c1, c2, c3) of det(M + lambda) = lambda^4 + c1 lambda^3 +
/// c2 lambda^2 + c3 lambda + det(M), over characteristic 2. c1 = tr(M);
/// for group elements c3 = tr(M^-1).
std::array<FieldElement, 3> charpoly_coeffs(const Matrix4& m);

/// Canonical coordinates of a group element: every element is uniquely
/// either U(alpha,beta) D(gamma)  (the Borel subgroup B) or
/// U(alpha,beta) D(gamma) T U(alpha2,beta2)  (the big cell).
struct BruhatParams {
    enum class Cell : uint8_t { kBorel = 0, kBig = 1 };

    Cell cell = Cell::kBorel;
    FieldElement alpha, beta, gamma;
    FieldElement alpha2, beta2;  // big cell only; zero in the Borel case

    static BruhatParams borel(FieldElement alpha, FieldElement beta, FieldElement gamma);
    static BruhatParams big_cell(FieldElement alpha, FieldElement beta, FieldElement gamma,
                                 FieldElement alpha2, FieldElement beta2);

    bool operator==(const BruhatParams& rhs) const = default;

    /// Order-preserving integer key (Borel block first, then the big cell,
    /// each in nested parameter order). Needs 5m+1 bits, so m <= 12.
    uint64_t packed() const;
    static BruhatParams unpack(const Field& f, uint64_t key);
};

std::optional<BruhatParams> factorize(const Matrix4& m);

/// Group element: canonical Bruhat parameters plus the cached matrix.
/// Equality and hashing use the parameters only.
class SuzukiElement {
public:
    static SuzukiElement assemble(const BruhatParams& p);
    static SuzukiElement identity(const Field& f);
    static SuzukiElement t_element(const Field& f);

    const BruhatParams& params() const { return params_; }
    const Matrix4& matrix() const { return matrix_; }
    const Field& field() const { return matrix_.field(); }
    bool is_identity() const;
    bool in_borel() const { return params_.cell == BruhatParams::Cell::kBorel; }

    SuzukiElement operator*(const SuzukiElement& rhs) const;
    /// T M^t T, using the symplectic condition; refactorized.
    SuzukiElement inversed() const;
    SuzukiElement pow(u128 e) const;

    bool operator==(const SuzukiElement& rhs) const { return params_ == rhs.params_; }

private:
    SuzukiElement(BruhatParams p, Matrix4 m) : params_(p), matrix_(m) {}
    BruhatParams params_;
    Matrix4 matrix_;
};

/// |Sz(q)| = q^2 (q^2 + 1)(q - 1) and |B| = q^2 (q - 1), q = 2^m.
/// m <= 25 so the count fits in 128 bits.
u128 group_order(int m);
u128 borel_order(int m);

SuzukiElement conjugate(const SuzukiElement& g, const SuzukiElement& x);  // x^-1 g x
uint64_t element_order(const SuzukiElement& g);

/// Exactly uniform element via unranking of the parameter space (the big
/// cell outweighs the Borel coset q^2 : 1).
SuzukiElement sample_uniform(const Field& f, Rng& rng);

/// Uniform over the big cell, i.e. over Sz(q) minus the Borel subgroup.
SuzukiElement sample_big_cell(const Field& f, Rng& rng);

/// Group-operations adapter for the words module.
struct SuzukiOps {
    const Field* field;
    using Element = SuzukiElement;
    Element identity() const { return SuzukiElement::identity(*field); }
    Element multiply(const Element& x, const Element& y) const { return x * y; }
    Element inverse(const Element& x) const { return x.inversed(); }
    bool equal(const Element& x, const Element& y) const { return x == y; }
};

struct GenerationResult {
    enum class Status { kGenerates, kProperSubgroup, kIndeterminate };
    Status status = Status::kIndeterminate;
    uint64_t closure_size = 0;
};

/// Breadth-first closure of {a, b, a^-1, b^-1}; generates iff the closure
/// reaches |Sz(q)|. Stops at `cap` visited elements with an explicit
/// indeterminate status.
GenerationResult generates(const SuzukiElement& a, const SuzukiElement& b, uint64_t cap);

/// Bijection between Sz(q) and 0..|Sz(q)|-1 in packed-parameter order.
/// kFull (q <= 8) caches matrices and can build generator action tables;
/// kKeysOnly (q <= 32) stores 8 bytes per element.
class GroupIndex {
public:
    enum class Mode : uint8_t { kFull = 0, kKeysOnly = 1 };

    static GroupIndex enumerate(const Field& f, Mode mode);

    const Field& field() const { return *field_; }
    Mode mode() const { return mode_; }
    uint64_t size() const { return keys_.size(); }
    std::optional<uint64_t> index_of(const BruhatParams& p) const;
    BruhatParams params_at(uint64_t i) const;
    const SuzukiElement& element_at(uint64_t i) const;

    /// Right-multiplication tables by a, a^-1, b, b^-1 (kFull only).
    std::array<std::vector<uint32_t>, 4> action_tables(const SuzukiElement& a,
                                                       const SuzukiElement& b) const;

    /// Binary cache: magic, field degree, modulus, count, sorted keys.
    void save(const std::string& path) const;
    static GroupIndex load(const Field& f, const std::string& path);

private:
    GroupIndex(const Field& f, Mode mode) : field_(&f), mode_(mode) {}
    const Field* field_;
    Mode mode_;
    std::vector<uint64_t> keys_;
    std::vector<SuzukiElement> elems_;
};

/// The copy of Sz(q0) inside Sz(q) cut out by parameters lying in the
/// embedded subfield; closed under the group law because the subfield
/// embedding intertwines the twist maps.
class SubfieldSuzuki {
public:
    SubfieldSuzuki(const Field& big, const Field& sub);

    const Field& big() const { return *big_; }
    const Field& sub() const { return *sub_; }
    u128 order() const { return group_order(sub_->degree()); }

    bool contains(const SuzukiElement& g) const;
    SuzukiElement embed(const SuzukiElement& sub_elem) const;
    SuzukiElement sample(Rng& rng) const;  // uniform over the embedded copy
    /// Canonical elements of the embedded copy: the images of T and of the
    /// big-cell element with all parameters 1.
    std::pair<SuzukiElement, SuzukiElement> standard_pair() const;

private:
    const Field* big_;
    const Field* sub_;
    SubfieldEmbedding emb_;
};

}  // namespace szlab
