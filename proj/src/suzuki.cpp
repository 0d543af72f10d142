#include "szlab/suzuki.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <unordered_set>

namespace szlab {

// ---------------------------------------------------------------- Matrix4 --

const Field& Matrix4::field() const {
    if (field_ == nullptr) throw std::invalid_argument("Matrix4: unset matrix");
    return *field_;
}

Matrix4 Matrix4::identity(const Field& f) {
    Matrix4 m(f);
    for (int i = 0; i < 4; ++i) m.e_[size_t(i * 4 + i)] = 1;
    return m;
}

void Matrix4::set(int r, int c, FieldElement v) {
    if (field_ == nullptr) field_ = &v.field();
    if (!field_->same(v.field())) throw std::invalid_argument("Matrix4::set: field mismatch");
    e_[size_t(r * 4 + c)] = v.bits();
}

Matrix4 Matrix4::operator*(const Matrix4& rhs) const {
    const Field& f = field();
    if (!f.same(rhs.field())) throw std::invalid_argument("Matrix4: field mismatch");
    Matrix4 r(f);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < 4; ++k) {
                acc ^= f.mul_bits(e_[size_t(i * 4 + k)], rhs.e_[size_t(k * 4 + j)]);
            }
            r.e_[size_t(i * 4 + j)] = acc;
        }
    }
    return r;
}

Matrix4 Matrix4::transposed() const {
    Matrix4 r(field());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e_[size_t(j * 4 + i)] = e_[size_t(i * 4 + j)];
    return r;
}

bool Matrix4::operator==(const Matrix4& rhs) const {
    return field_ != nullptr && rhs.field_ != nullptr && field_->same(*rhs.field_) &&
           e_ == rhs.e_;
}

// ------------------------------------------------------------ the shapes --

Matrix4 u_matrix(FieldElement a, FieldElement b, FieldElement alpha, FieldElement beta) {
    const Field& f = a.field();
    Matrix4 m(f);
    FieldElement one = f.one(), zero = f.zero();
    m.set(0, 0, one);
    m.set(0, 1, zero);
    m.set(0, 2, zero);
    m.set(0, 3, zero);
    m.set(1, 0, alpha);
    m.set(1, 1, one);
    m.set(1, 2, zero);
    m.set(1, 3, zero);
    m.set(2, 0, alpha * a + beta);
    m.set(2, 1, a);
    m.set(2, 2, one);
    m.set(2, 3, zero);
    m.set(3, 0, alpha * alpha * a + alpha * beta + b);
    m.set(3, 1, beta);
    m.set(3, 2, alpha);
    m.set(3, 3, one);
    return m;
}

Matrix4 d_matrix(FieldElement c, FieldElement gamma) {
    if (c.is_zero() || gamma.is_zero()) {
        throw std::invalid_argument("d_matrix: diagonal parameters must be nonzero");
    }
    const Field& f = c.field();
    Matrix4 m(f);
    FieldElement gi = gamma.inv();
    m.set(0, 0, c * gamma);
    m.set(1, 1, gamma);
    m.set(2, 2, gi);
    m.set(3, 3, gi * c.inv());
    m.set(0, 1, f.zero());  // pin the field on the zero entries
    return m;
}

Matrix4 t_matrix(const Field& f) {
    Matrix4 m(f);
    FieldElement one = f.one();
    m.set(0, 3, one);
    m.set(1, 2, one);
    m.set(2, 1, one);
    m.set(3, 0, one);
    return m;
}

Matrix4 big_u(FieldElement alpha, FieldElement beta) {
    return u_matrix(alpha.theta(), beta.theta(), alpha, beta);
}

Matrix4 big_d(FieldElement gamma) { return d_matrix(gamma.theta(), gamma); }

bool is_symplectic(const Matrix4& m) {
    const Matrix4 t = t_matrix(m.field());
    return m.transposed() * t * m == t;
}

namespace {

// 3x3 minor over characteristic 2: the six permutation products, no signs.
uint32_t det3_bits(const Field& f, const Matrix4& m, int r0, int r1, int r2, int c0, int c1,
                   int c2) {
    auto e = [&](int r, int c) { return m.bits_at(r, c); };
    uint32_t acc = 0;
    acc ^= f.mul_bits(e(r0, c0), f.mul_bits(e(r1, c1), e(r2, c2)));
    acc ^= f.mul_bits(e(r0, c0), f.mul_bits(e(r1, c2), e(r2, c1)));
    acc ^= f.mul_bits(e(r0, c1), f.mul_bits(e(r1, c0), e(r2, c2)));
    acc ^= f.mul_bits(e(r0, c1), f.mul_bits(e(r1, c2), e(r2, c0)));
    acc ^= f.mul_bits(e(r0, c2), f.mul_bits(e(r1, c0), e(r2, c1)));
    acc ^= f.mul_bits(e(r0, c2), f.mul_bits(e(r1, c1), e(r2, c0)));
    return acc;
}

}  // namespace

FieldElement det(const Matrix4& m) {
    const Field& f = m.field();
    static constexpr int rest[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    uint32_t acc = 0;
    for (int j = 0; j < 4; ++j) {
        acc ^= f.mul_bits(m.bits_at(0, j),
                          det3_bits(f, m, 1, 2, 3, rest[j][0], rest[j][1], rest[j][2]));
    }
    return f.element(acc);
}

std::array<FieldElement, 3> charpoly_coeffs(const Matrix4& m) {
    const Field& f = m.field();
    uint32_t c1 = 0;
    for (int i = 0; i < 4; ++i) c1 ^= m.bits_at(i, i);
    uint32_t c2 = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            c2 ^= f.mul_bits(m.bits_at(i, i), m.bits_at(j, j));
            c2 ^= f.mul_bits(m.bits_at(i, j), m.bits_at(j, i));
        }
    }
    uint32_t c3 = 0;
    static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& t : triples) {
        c3 ^= det3_bits(f, m, t[0], t[1], t[2], t[0], t[1], t[2]);
    }
    return {f.element(c1), f.element(c2), f.element(c3)};
}

// ----------------------------------------------------------- BruhatParams --

BruhatParams BruhatParams::borel(FieldElement alpha, FieldElement beta, FieldElement gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("BruhatParams: gamma must be nonzero");
    const Field& f = gamma.field();
    if (!f.same(alpha.field()) || !f.same(beta.field())) {
        throw std::invalid_argument("BruhatParams: field mismatch");
    }
    BruhatParams p;
    p.cell = Cell::kBorel;
    p.alpha = alpha;
    p.beta = beta;
    p.gamma = gamma;
    p.alpha2 = f.zero();
    p.beta2 = f.zero();
    return p;
}

BruhatParams BruhatParams::big_cell(FieldElement alpha, FieldElement beta, FieldElement gamma,
                                    FieldElement alpha2, FieldElement beta2) {
    BruhatParams p = borel(alpha, beta, gamma);
    const Field& f = gamma.field();
    if (!f.same(alpha2.field()) || !f.same(beta2.field())) {
        throw std::invalid_argument("BruhatParams: field mismatch");
    }
    p.cell = Cell::kBig;
    p.alpha2 = alpha2;
    p.beta2 = beta2;
    return p;
}

uint64_t BruhatParams::packed() const {
    const int m = gamma.field().degree();
    if (m > 12) throw capacity_error("BruhatParams::packed: needs 5m+1 bits, so m <= 12");
    uint64_t key = uint64_t(cell);
    key = (key << m) | alpha.bits();
    key = (key << m) | beta.bits();
    key = (key << m) | gamma.bits();
    key = (key << m) | alpha2.bits();
    key = (key << m) | beta2.bits();
    return key;
}

BruhatParams BruhatParams::unpack(const Field& f, uint64_t key) {
    const int m = f.degree();
    const uint64_t mask = f.order() - 1;
    FieldElement beta2 = f.element(key & mask);
    key >>= m;
    FieldElement alpha2 = f.element(key & mask);
    key >>= m;
    FieldElement gamma = f.element(key & mask);
    key >>= m;
    FieldElement beta = f.element(key & mask);
    key >>= m;
    FieldElement alpha = f.element(key & mask);
    key >>= m;
    if (key == 0) {
        if (!alpha2.is_zero() || !beta2.is_zero()) {
            throw std::invalid_argument("BruhatParams::unpack: stray big-cell bits");
        }
        return borel(alpha, beta, gamma);
    }
    if (key != 1) throw std::invalid_argument("BruhatParams::unpack: bad cell tag");
    return big_cell(alpha, beta, gamma, alpha2, beta2);
}

// ---------------------------------------------------------- SuzukiElement --

SuzukiElement SuzukiElement::assemble(const BruhatParams& p) {
    const Field& f = p.gamma.field();
    Matrix4 m = big_u(p.alpha, p.beta);
    // Right-multiply by D(gamma): scale column j by the j-th diagonal entry.
    FieldElement d0 = p.gamma.theta() * p.gamma;
    std::array<FieldElement, 4> diag{d0, p.gamma, p.gamma.inv(), d0.inv()};
    Matrix4 scaled(f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) scaled.set(i, j, m.at(i, j) * diag[size_t(j)]);
    if (p.cell == BruhatParams::Cell::kBorel) return {p, scaled};
    // Right-multiply by T (column reversal), then by U(alpha2, beta2).
    Matrix4 flipped(f);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) flipped.set(i, j, scaled.at(i, 3 - j));
    return {p, flipped * big_u(p.alpha2, p.beta2)};
}

SuzukiElement SuzukiElement::identity(const Field& f) {
    return assemble(BruhatParams::borel(f.zero(), f.zero(), f.one()));
}

SuzukiElement SuzukiElement::t_element(const Field& f) {
    return assemble(BruhatParams::big_cell(f.zero(), f.zero(), f.one(), f.zero(), f.zero()));
}

bool SuzukiElement::is_identity() const {
    return params_.cell == BruhatParams::Cell::kBorel && params_.alpha.is_zero() &&
           params_.beta.is_zero() && params_.gamma.is_one();
}

SuzukiElement SuzukiElement::operator*(const SuzukiElement& rhs) const {
    Matrix4 prod = matrix_ * rhs.matrix_;
    std::optional<BruhatParams> p = factorize(prod);
    if (!p) throw internal_error("SuzukiElement: product escaped the group (factorization bug)");
    return {*p, prod};
}

SuzukiElement SuzukiElement::inversed() const {
    const Matrix4 t = t_matrix(field());
    Matrix4 inv = t * matrix_.transposed() * t;
    std::optional<BruhatParams> p = factorize(inv);
    if (!p) throw internal_error("SuzukiElement: inverse escaped the group (factorization bug)");
    return {*p, inv};
}

SuzukiElement SuzukiElement::pow(u128 e) const {
    SuzukiElement acc = identity(field());
    SuzukiElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// -------------------------------------------------------------- factorize --

std::optional<BruhatParams> factorize(const Matrix4& m) {
    const Field& f = m.field();
    const uint64_t gamma_exp = f.twist() - 1;  // inverse of theta+1 mod q-1

    if (m.bits_at(0, 3) == 0) {
        // Borel shape: first row must be (gamma^(theta+1), 0, 0, 0).
        if (m.bits_at(0, 0) == 0 || m.bits_at(0, 1) != 0 || m.bits_at(0, 2) != 0) {
            return std::nullopt;
        }
        FieldElement v = m.at(0, 0);
        FieldElement vinv = v.inv();
        FieldElement gamma = v.pow(gamma_exp);
        FieldElement alpha = m.at(1, 0) * vinv;
        FieldElement beta = m.at(2, 0) * vinv + alpha * alpha.theta();
        BruhatParams p = BruhatParams::borel(alpha, beta, gamma);
        if (SuzukiElement::assemble(p).matrix() == m) return p;
        return std::nullopt;
    }

    // Big cell: the first row is gamma^(theta+1) times the last row of
    // U(alpha2, beta2), which pins gamma, alpha2, beta2.
    FieldElement v = m.at(0, 3);
    FieldElement vinv = v.inv();
    FieldElement gamma = v.pow(gamma_exp);
    FieldElement alpha2 = m.at(0, 2) * vinv;
    FieldElement beta2 = m.at(0, 1) * vinv;
    // Peel the right unipotent factor; what remains is U(alpha,beta) D T,
    // whose last column is gamma^(theta+1) times the first column of U.
    const Matrix4 t = t_matrix(f);
    Matrix4 u2 = big_u(alpha2, beta2);
    Matrix4 r = m * (t * u2.transposed() * t);
    FieldElement alpha = r.at(1, 3) * vinv;
    FieldElement beta = r.at(2, 3) * vinv + alpha * alpha.theta();
    BruhatParams p = BruhatParams::big_cell(alpha, beta, gamma, alpha2, beta2);
    if (SuzukiElement::assemble(p).matrix() == m) return p;
    return std::nullopt;
}

// ------------------------------------------------------------ group sizes --

u128 group_order(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("group_order: m must be odd");
    if (m > 25) throw capacity_error("group_order: q^5 exceeds 128 bits for m > 25");
    u128 q = u128(1) << m;
    return q * q * (q * q + 1) * (q - 1);
}

u128 borel_order(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("borel_order: m must be odd");
    if (m > 25) throw capacity_error("borel_order: m capped at 25");
    u128 q = u128(1) << m;
    return q * q * (q - 1);
}

// ------------------------------------------------------------- utilities --

SuzukiElement conjugate(const SuzukiElement& g, const SuzukiElement& x) {
    return x.inversed() * g * x;
}

uint64_t element_order(const SuzukiElement& g) {
    if (g.is_identity()) return 1;
    const Field& f = g.field();
    const uint64_t q = f.order();
    const uint64_t theta = f.twist();
    // Every element is either unipotent (order dividing 4) or lies in a
    // torus of order q-1, q-theta+1 or q+theta+1.
    for (uint64_t n : {uint64_t(4), q - 1, q - theta + 1, q + theta + 1}) {
        if (n == 0 || !g.pow(n).is_identity()) continue;
        uint64_t o = n;
        for (uint64_t p : small_prime_factors(n)) {
            while (o % p == 0 && g.pow(o / p).is_identity()) o /= p;
        }
        return o;
    }
    throw internal_error("element_order: no torus exponent annihilates the element");
}

SuzukiElement sample_uniform(const Field& f, Rng& rng) {
    const u128 q = f.order();
    const u128 borel = borel_order(f.degree());
    u128 idx = rng.below128(group_order(f.degree()));
    auto take = [&](u128 radix) {
        uint64_t digit = uint64_t(idx % radix);
        idx /= radix;
        return digit;
    };
    if (idx < borel) {
        uint64_t gi = take(q - 1);
        uint64_t be = take(q);
        uint64_t al = take(q);
        return SuzukiElement::assemble(
            BruhatParams::borel(f.element(al), f.element(be), f.element(gi + 1)));
    }
    idx -= borel;
    uint64_t b2 = take(q);
    uint64_t a2 = take(q);
    uint64_t gi = take(q - 1);
    uint64_t be = take(q);
    uint64_t al = take(q);
    return SuzukiElement::assemble(BruhatParams::big_cell(
        f.element(al), f.element(be), f.element(gi + 1), f.element(a2), f.element(b2)));
}

SuzukiElement sample_big_cell(const Field& f, Rng& rng) {
    const uint64_t q = f.order();
    FieldElement al = f.element(rng.below(q));
    FieldElement be = f.element(rng.below(q));
    FieldElement ga = f.element(1 + rng.below(q - 1));
    FieldElement a2 = f.element(rng.below(q));
    FieldElement b2 = f.element(rng.below(q));
    return SuzukiElement::assemble(BruhatParams::big_cell(al, be, ga, a2, b2));
}

GenerationResult generates(const SuzukiElement& a, const SuzukiElement& b, uint64_t cap) {
    const Field& f = a.field();
    if (!f.same(b.field())) throw std::invalid_argument("generates: field mismatch");
    const std::array<SuzukiElement, 4> gens{a, a.inversed(), b, b.inversed()};

    std::unordered_set<uint64_t> visited;
    std::vector<SuzukiElement> frontier{SuzukiElement::identity(f)};
    visited.insert(frontier.front().params().packed());
    while (!frontier.empty()) {
        std::vector<SuzukiElement> next;
        for (const SuzukiElement& g : frontier) {
            for (const SuzukiElement& s : gens) {
                SuzukiElement h = g * s;
                if (visited.insert(h.params().packed()).second) {
                    if (visited.size() > cap) {
                        return {GenerationResult::Status::kIndeterminate, visited.size()};
                    }
                    next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    u128 order = group_order(f.degree());
    GenerationResult res;
    res.closure_size = visited.size();
    res.status = (u128(visited.size()) == order) ? GenerationResult::Status::kGenerates
                                                 : GenerationResult::Status::kProperSubgroup;
    return res;
}

// ------------------------------------------------------------- GroupIndex --

GroupIndex GroupIndex::enumerate(const Field& f, Mode mode) {
    const int m = f.degree();
    if (mode == Mode::kFull && m > 3) {
        throw capacity_error("GroupIndex: full enumeration capped at q = 8 (use kKeysOnly)");
    }
    if (mode == Mode::kKeysOnly && m > 5) {
        throw capacity_error("GroupIndex: key enumeration capped at q = 32");
    }
    const uint64_t q = f.order();
    GroupIndex idx(f, mode);
    idx.keys_.reserve(size_t(group_order(m)));

    auto emit = [&](const BruhatParams& p) {
        idx.keys_.push_back(p.packed());
        if (mode == Mode::kFull) idx.elems_.push_back(SuzukiElement::assemble(p));
    };
    for (uint64_t al = 0; al < q; ++al) {
        for (uint64_t be = 0; be < q; ++be) {
            for (uint64_t ga = 1; ga < q; ++ga) {
                emit(BruhatParams::borel(f.element(al), f.element(be), f.element(ga)));
            }
        }
    }
    for (uint64_t al = 0; al < q; ++al) {
        for (uint64_t be = 0; be < q; ++be) {
            for (uint64_t ga = 1; ga < q; ++ga) {
                for (uint64_t a2 = 0; a2 < q; ++a2) {
                    for (uint64_t b2 = 0; b2 < q; ++b2) {
                        emit(BruhatParams::big_cell(f.element(al), f.element(be), f.element(ga),
                                                    f.element(a2), f.element(b2)));
                    }
                }
            }
        }
    }

    if (u128(idx.keys_.size()) != group_order(m)) {
        throw internal_error("GroupIndex: element count disagrees with the order formula");
    }
    for (size_t i = 1; i < idx.keys_.size(); ++i) {
        if (idx.keys_[i - 1] >= idx.keys_[i]) {
            throw internal_error("GroupIndex: parametrization collision");
        }
    }
    return idx;
}

std::optional<uint64_t> GroupIndex::index_of(const BruhatParams& p) const {
    uint64_t key = p.packed();
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return std::nullopt;
    return uint64_t(it - keys_.begin());
}

BruhatParams GroupIndex::params_at(uint64_t i) const {
    return BruhatParams::unpack(*field_, keys_.at(i));
}

const SuzukiElement& GroupIndex::element_at(uint64_t i) const {
    if (mode_ != Mode::kFull) {
        throw std::invalid_argument("GroupIndex::element_at: requires full mode");
    }
    return elems_.at(i);
}

std::array<std::vector<uint32_t>, 4> GroupIndex::action_tables(const SuzukiElement& a,
                                                               const SuzukiElement& b) const {
    if (mode_ != Mode::kFull) {
        throw std::invalid_argument("GroupIndex::action_tables: requires full mode");
    }
    const std::array<SuzukiElement, 4> gens{a, a.inversed(), b, b.inversed()};
    std::array<std::vector<uint32_t>, 4> tables;
    for (int s = 0; s < 4; ++s) {
        tables[size_t(s)].resize(keys_.size());
        for (uint64_t i = 0; i < keys_.size(); ++i) {
            Matrix4 prod = elems_[i].matrix() * gens[size_t(s)].matrix();
            std::optional<BruhatParams> p = factorize(prod);
            if (!p) throw internal_error("GroupIndex: product escaped the group");
            std::optional<uint64_t> j = index_of(*p);
            if (!j) throw internal_error("GroupIndex: product missing from the index");
            tables[size_t(s)][i] = uint32_t(*j);
        }
    }
    return tables;
}

namespace {
constexpr char kIndexMagic[8] = {'S', 'Z', 'G', 'I', 'D', 'X', '0', '1'};
}

void GroupIndex::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("GroupIndex::save: cannot open " + path);
    out.write(kIndexMagic, 8);
    uint32_t m = uint32_t(field_->degree());
    uint32_t mode = uint32_t(mode_);
    uint64_t modulus = field_->modulus();
    uint64_t count = keys_.size();
    out.write(reinterpret_cast<const char*>(&m), 4);
    out.write(reinterpret_cast<const char*>(&mode), 4);
    out.write(reinterpret_cast<const char*>(&modulus), 8);
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(keys_.data()), std::streamsize(count * 8));
    if (!out) throw std::runtime_error("GroupIndex::save: write failed for " + path);
}

GroupIndex GroupIndex::load(const Field& f, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("GroupIndex::load: cannot open " + path);
    char magic[8];
    uint32_t m = 0, mode = 0;
    uint64_t modulus = 0, count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&m), 4);
    in.read(reinterpret_cast<char*>(&mode), 4);
    in.read(reinterpret_cast<char*>(&modulus), 8);
    in.read(reinterpret_cast<char*>(&count), 8);
    if (!in || std::memcmp(magic, kIndexMagic, 8) != 0) {
        throw std::runtime_error("GroupIndex::load: bad header in " + path);
    }
    if (int(m) != f.degree() || modulus != f.modulus()) {
        throw std::runtime_error("GroupIndex::load: field mismatch in " + path);
    }
    if (u128(count) != group_order(f.degree())) {
        throw std::runtime_error(
            "GroupIndex::load: element count disagrees with the order formula");
    }
    GroupIndex idx(f, Mode(mode));
    idx.keys_.resize(count);
    in.read(reinterpret_cast<char*>(idx.keys_.data()), std::streamsize(count * 8));
    if (!in) throw std::runtime_error("GroupIndex::load: truncated file " + path);
    if (idx.mode_ == Mode::kFull) {
        idx.elems_.reserve(count);
        for (uint64_t key : idx.keys_) {
            idx.elems_.push_back(SuzukiElement::assemble(BruhatParams::unpack(f, key)));
        }
    }
    return idx;
}

// --------------------------------------------------------- SubfieldSuzuki --

SubfieldSuzuki::SubfieldSuzuki(const Field& big, const Field& sub)
    : big_(&big), sub_(&sub), emb_(sub, big) {}

bool SubfieldSuzuki::contains(const SuzukiElement& g) const {
    const BruhatParams& p = g.params();
    if (!emb_.in_image(p.alpha) || !emb_.in_image(p.beta) || !emb_.in_image(p.gamma)) {
        return false;
    }
    if (p.cell == BruhatParams::Cell::kBorel) return true;
    return emb_.in_image(p.alpha2) && emb_.in_image(p.beta2);
}

SuzukiElement SubfieldSuzuki::embed(const SuzukiElement& sub_elem) const {
    const BruhatParams& p = sub_elem.params();
    if (p.cell == BruhatParams::Cell::kBorel) {
        return SuzukiElement::assemble(
            BruhatParams::borel(emb_.map(p.alpha), emb_.map(p.beta), emb_.map(p.gamma)));
    }
    return SuzukiElement::assemble(BruhatParams::big_cell(emb_.map(p.alpha), emb_.map(p.beta),
                                                          emb_.map(p.gamma), emb_.map(p.alpha2),
                                                          emb_.map(p.beta2)));
}

SuzukiElement SubfieldSuzuki::sample(Rng& rng) const { return embed(sample_uniform(*sub_, rng)); }

std::pair<SuzukiElement, SuzukiElement> SubfieldSuzuki::standard_pair() const {
    FieldElement one = sub_->one();
    SuzukiElement t = SuzukiElement::t_element(*sub_);
    SuzukiElement g = SuzukiElement::assemble(BruhatParams::big_cell(one, one, one, one, one));
    return {embed(t), embed(g)};
}

}  // namespace szlab
