#include "szlab/field.hpp"

#include <algorithm>
#include <array>

namespace szlab {

namespace {

// ------------------------------------------------ GF(2)[X] on bit words ----
// Used only for modulus selection; degrees stay <= 31.

uint64_t gf2x_clmul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

int gf2x_degree(uint64_t p) {
    return p == 0 ? -1 : 63 - __builtin_clzll(p);
}

uint64_t gf2x_mod(uint64_t a, uint64_t f) {
    int df = gf2x_degree(f);
    for (int i = gf2x_degree(a); i >= df; i = gf2x_degree(a)) {
        a ^= f << (i - df);
    }
    return a;
}

uint64_t gf2x_mulmod(uint64_t a, uint64_t b, uint64_t f) {
    return gf2x_mod(gf2x_clmul(a, b), f);
}

uint64_t gf2x_gcd(uint64_t a, uint64_t b) {
    while (b) {
        a = gf2x_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// ------------------------------------------------------- small number theory
std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

// ------------------------------------------------------------------ Field --

bool Field::is_irreducible(uint64_t poly, int degree) {
    if (degree < 1) return false;
    // No irreducible factor of degree <= degree/2 may divide poly; such a
    // factor would divide X^(2^i) - X for its degree i.
    uint64_t r = 2;  // X
    for (int i = 1; i <= degree / 2; ++i) {
        r = gf2x_mulmod(r, r, poly);
        if (gf2x_gcd(poly, r ^ 2) != 1) return false;
    }
    return true;
}

Field::Field(int m) {
    if (m < 1 || m > kMaxDegree || m % 2 == 0) {
        throw std::invalid_argument(
            "Field: degree must be odd and between 1 and 31, got " + std::to_string(m));
    }
    m_ = m;
    // Least monic irreducible with nonzero constant term (moduli divisible
    // by X are excluded so the class of X is always invertible).
    for (uint64_t cand = (1ull << m) | 1; cand < (2ull << m); cand += 2) {
        if (is_irreducible(cand, m)) {
            modulus_ = cand;
            break;
        }
    }
    if (modulus_ == 0) throw internal_error("Field: no irreducible modulus found");
    if (m_ <= kTableMaxDegree) build_tables();
}

FieldElement Field::element(uint64_t bits) const {
    if (bits >= order()) {
        throw std::invalid_argument("Field::element: bits out of range for GF(2^" +
                                    std::to_string(m_) + ")");
    }
    return {uint32_t(bits), this};
}

uint32_t Field::mul_bits(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[size_t(log_[a]) + size_t(log_[b])];
    uint64_t prod = gf2x_clmul(a, b);
    for (int i = 2 * m_ - 2; i >= m_; --i) {
        if ((prod >> i) & 1) prod ^= modulus_ << (i - m_);
    }
    return uint32_t(prod);
}

uint32_t Field::pow_bits(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_bits(r, a);
        a = mul_bits(a, a);
        e >>= 1;
    }
    return r;
}

void Field::build_tables() {
    const uint64_t q = order();
    // Least multiplicative generator, certified by checking the order
    // against every prime factor of q-1.
    auto primes = prime_factors(q - 1);
    uint32_t g = 0;
    for (uint32_t cand = 2; cand < q && g == 0; ++cand) {
        bool ok = true;
        for (uint64_t p : primes) {
            // pow without tables (they are not built yet)
            uint32_t r = 1, base = cand;
            uint64_t e = (q - 1) / p;
            while (e) {
                if (e & 1) r = uint32_t(gf2x_mod(gf2x_clmul(r, base), modulus_));
                base = uint32_t(gf2x_mod(gf2x_clmul(base, base), modulus_));
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) g = cand;
    }
    if (g == 0 && q == 2) g = 1;
    if (g == 0) throw internal_error("Field: no multiplicative generator found");

    exp_.assign(2 * (q - 1), 0);
    log_.assign(q, -1);
    uint32_t v = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
        exp_[i] = v;
        exp_[i + (q - 1)] = v;
        log_[v] = int32_t(i);
        v = uint32_t(gf2x_mod(gf2x_clmul(v, g), modulus_));
    }
    if (v != 1) throw internal_error("Field: generator order check failed");
}

// ---------------------------------------------------------- FieldElement --

namespace {
const Field& require_same(const FieldElement& a, const FieldElement& b) {
    const Field& fa = a.field();
    if (!fa.same(b.field())) {
        throw std::invalid_argument("FieldElement: operands from different fields");
    }
    return fa;
}
}  // namespace

const Field& FieldElement::field() const {
    if (field_ == nullptr) throw std::invalid_argument("FieldElement: unset element");
    return *field_;
}

FieldElement FieldElement::operator+(FieldElement rhs) const {
    require_same(*this, rhs);
    return {bits_ ^ rhs.bits_, field_};
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
    const Field& f = require_same(*this, rhs);
    return {f.mul_bits(bits_, rhs.bits_), field_};
}

FieldElement FieldElement::square() const {
    return {field().mul_bits(bits_, bits_), field_};
}

FieldElement FieldElement::pow(uint64_t e) const {
    return {field().pow_bits(bits_, e), field_};
}

FieldElement FieldElement::inv() const {
    if (bits_ == 0) throw std::invalid_argument("FieldElement: division by zero");
    return pow(field().order() - 2);
}

FieldElement FieldElement::theta() const {
    FieldElement r = *this;
    for (int i = 0; i < field().twist_log(); ++i) r = r.square();
    return r;
}

// ---------------------------------------------------------------- UniPoly --

const Field& UniPoly::field() const {
    if (field_ == nullptr) throw std::invalid_argument("UniPoly: unset polynomial");
    return *field_;
}

bool UniPoly::field_same(const UniPoly& rhs) const {
    return field_ != nullptr && rhs.field_ != nullptr && field_->same(*rhs.field_);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_coeff_bits(const Field& f, std::span<const uint32_t> coeffs) {
    UniPoly p(f);
    p.c_.assign(coeffs.begin(), coeffs.end());
    for (uint32_t c : p.c_) {
        if (c >= f.order()) throw std::invalid_argument("UniPoly: coefficient out of range");
    }
    p.trim();
    return p;
}

UniPoly UniPoly::constant(FieldElement c) {
    UniPoly p(c.field());
    if (!c.is_zero()) p.c_.push_back(c.bits());
    return p;
}

UniPoly UniPoly::x_power(const Field& f, int k) {
    UniPoly p(f);
    p.c_.assign(size_t(k) + 1, 0);
    p.c_.back() = 1;
    return p;
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || size_t(i) >= c_.size()) return field().zero();
    return field().element(c_[size_t(i)]);
}

FieldElement UniPoly::leading() const {
    if (is_zero()) return field().zero();
    return field().element(c_.back());
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    if (!field_same(rhs)) throw std::invalid_argument("UniPoly: field mismatch");
    UniPoly r(*field_);
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] ^= c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) r.c_[i] ^= rhs.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (!field_same(rhs)) throw std::invalid_argument("UniPoly: field mismatch");
    UniPoly r(*field_);
    if (is_zero() || rhs.is_zero()) return r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) {
            r.c_[i + j] ^= field_->mul_bits(c_[i], rhs.c_[j]);
        }
    }
    r.trim();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& rhs) const {
    if (!field_same(rhs)) throw std::invalid_argument("UniPoly: field mismatch");
    if (rhs.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
    UniPoly q(*field_), r = *this;
    if (degree() < rhs.degree()) return {q, r};
    q.c_.assign(size_t(degree() - rhs.degree()) + 1, 0);
    const uint32_t lead_inv = field_->pow_bits(rhs.c_.back(), field_->order() - 2);
    while (!r.is_zero() && r.degree() >= rhs.degree()) {
        int shift = r.degree() - rhs.degree();
        uint32_t factor = field_->mul_bits(r.c_.back(), lead_inv);
        q.c_[size_t(shift)] ^= factor;
        for (size_t i = 0; i < rhs.c_.size(); ++i) {
            r.c_[size_t(shift) + i] ^= field_->mul_bits(factor, rhs.c_[i]);
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::operator%(const UniPoly& rhs) const { return divmod(rhs).second; }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    if (c_.back() == 1) return *this;
    UniPoly r = *this;
    uint32_t lead_inv = field_->pow_bits(c_.back(), field_->order() - 2);
    for (uint32_t& c : r.c_) c = field_->mul_bits(c, lead_inv);
    return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

FieldElement UniPoly::eval(FieldElement x) const {
    const Field& f = field();
    if (!f.same(x.field())) throw std::invalid_argument("UniPoly::eval: field mismatch");
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = f.mul_bits(acc, x.bits()) ^ c_[i];
    }
    return f.element(acc);
}

namespace {

// X^(2^m) mod f by repeated squaring.
UniPoly frobenius_iterate(const UniPoly& f) {
    const Field& k = f.field();
    UniPoly r = UniPoly::x_power(k, 1) % f;
    for (int i = 0; i < k.degree(); ++i) r = (r * r) % f;
    return r;
}

// sum_{j < m} (beta X)^(2^j) mod f -- evaluates to the absolute trace of
// beta*x at every root x of f.
UniPoly trace_poly(FieldElement beta, const UniPoly& f) {
    const Field& k = f.field();
    UniPoly bx(k);
    std::array<uint32_t, 2> coeffs{0, beta.bits()};
    bx = UniPoly::from_coeff_bits(k, coeffs);
    UniPoly r = bx % f;
    UniPoly acc = r;
    for (int j = 1; j < k.degree(); ++j) {
        r = (r * r) % f;
        acc = acc + r;
    }
    return acc;
}

void split_linear(const UniPoly& f, std::vector<FieldElement>& out) {
    const Field& k = f.field();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        // monic X + c: root c in characteristic 2
        out.push_back(f.monic().coeff(0));
        return;
    }
    for (int i = 0; i < k.degree(); ++i) {
        UniPoly t = trace_poly(k.element(1u << i), f);
        UniPoly d = UniPoly::gcd(f, t);
        if (d.degree() > 0 && d.degree() < f.degree()) {
            split_linear(d, out);
            split_linear(f.divmod(d).first, out);
            return;
        }
    }
    throw internal_error("find_roots: trace splitting failed on a split polynomial");
}

}  // namespace

int count_roots(const UniPoly& f) {
    if (f.is_zero()) {
        throw std::invalid_argument("count_roots: zero polynomial (every point is a root)");
    }
    if (f.degree() == 0) return 0;
    const Field& k = f.field();
    UniPoly s = (frobenius_iterate(f) + UniPoly::x_power(k, 1) % f);
    UniPoly g = UniPoly::gcd(f, s);
    // s == 0 means f divides X^q - X: all factors are distinct and linear.
    if (s.is_zero()) return f.degree();
    return g.degree();
}

std::vector<FieldElement> find_roots(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
    std::vector<FieldElement> roots;
    if (f.degree() == 0) return roots;
    const Field& k = f.field();
    UniPoly s = (frobenius_iterate(f) + UniPoly::x_power(k, 1) % f);
    UniPoly g = s.is_zero() ? f.monic() : UniPoly::gcd(f, s);
    split_linear(g, roots);
    std::sort(roots.begin(), roots.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.bits() < b.bits(); });
    return roots;
}

// --------------------------------------------------------- SubfieldEmbedding

SubfieldEmbedding::SubfieldEmbedding(const Field& sub, const Field& big)
    : sub_(&sub), big_(&big), root_(big.zero()) {
    if (big.degree() % sub.degree() != 0) {
        throw std::invalid_argument("SubfieldEmbedding: subfield degree " +
                                    std::to_string(sub.degree()) + " does not divide " +
                                    std::to_string(big.degree()));
    }
    // The subfield modulus has GF(2) coefficients; read it as a polynomial
    // over the big field and take its least root there.
    std::vector<uint32_t> coeffs(size_t(sub.degree()) + 1, 0);
    for (int i = 0; i <= sub.degree(); ++i) coeffs[size_t(i)] = (sub.modulus() >> i) & 1;
    UniPoly mod_poly = UniPoly::from_coeff_bits(big, coeffs);
    std::vector<FieldElement> roots = find_roots(mod_poly);
    if (int(roots.size()) != sub.degree()) {
        throw internal_error("SubfieldEmbedding: modulus does not split as expected");
    }
    root_ = roots.front();
    root_powers_.reserve(size_t(sub.degree()));
    FieldElement p = big.one();
    for (int i = 0; i < sub.degree(); ++i) {
        root_powers_.push_back(p);
        p = p * root_;
    }
}

FieldElement SubfieldEmbedding::map(FieldElement x) const {
    if (!x.field().same(*sub_)) {
        throw std::invalid_argument("SubfieldEmbedding::map: element not from the subfield");
    }
    FieldElement acc = big_->zero();
    for (int i = 0; i < sub_->degree(); ++i) {
        if ((x.bits() >> i) & 1) acc = acc + root_powers_[size_t(i)];
    }
    return acc;
}

bool SubfieldEmbedding::in_image(FieldElement y) const {
    if (!y.field().same(*big_)) {
        throw std::invalid_argument("SubfieldEmbedding::in_image: element not from the big field");
    }
    FieldElement r = y;
    for (int i = 0; i < sub_->degree(); ++i) r = r.square();
    return r == y;
}

bool in_proper_subfield(FieldElement x) {
    const int m = x.field().degree();
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        FieldElement r = x;
        for (int i = 0; i < d; ++i) r = r.square();
        if (r == x) return true;
    }
    return false;
}

uint64_t proper_subfield_union_size(int m) {
    // Elements whose minimal field GF(2^e) has e a proper divisor of m.
    uint64_t total = 0;
    for (int e = 1; e < m; ++e) {
        if (m % e != 0) continue;
        int64_t n_exact = 0;
        for (int c = 1; c <= e; ++c) {
            if (e % c != 0) continue;
            n_exact += int64_t(moebius(e / c)) * int64_t(1ll << c);
        }
        total += uint64_t(n_exact);
    }
    return total;
}

}  // namespace szlab
