#include "nrt/gf.hpp"

#include <algorithm>
#include <cstdint>

#include "nrt/errors.hpp"

namespace nrt {

namespace {

constexpr uint32_t kTableLimit = 256;  // precompute q*q tables up to here
constexpr uint64_t kMaxOrder = 1u << 16;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficient vectors over GF(p), constant term first, no trailing-zero
// trimming guarantees; degree() ignores trailing zeros.
int poly_degree(const std::vector<int>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f modulo monic g, coefficients mod p.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
    int dg = poly_degree(g);
    for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
        int c = f[df];  // g is monic, so the quotient coefficient is just c
        for (int j = 0; j <= dg; ++j) {
            f[df - dg + j] = ((f[df - dg + j] - c * g[j]) % p + p) % p;
        }
    }
    f.resize(std::max(dg, 1));
    return f;
}

// Trial division against every monic polynomial of degree 1..k/2.
bool is_irreducible(const std::vector<int>& mod_poly, int p, int k) {
    for (int d = 1; 2 * d <= k; ++d) {
        // enumerate monic divisors of degree d by odometer over d low coeffs
        std::vector<int> div(d + 1, 0);
        div[d] = 1;
        while (true) {
            auto rem = poly_mod(mod_poly, div, p);
            if (poly_degree(rem) < 0) return false;
            int i = 0;
            while (i < d && ++div[i] == p) div[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

const std::vector<int>* default_modulus(int p, int k) {
    static const std::vector<int> gf4 = {1, 1, 1};      // x^2 + x + 1
    static const std::vector<int> gf8 = {1, 1, 0, 1};   // x^3 + x + 1
    static const std::vector<int> gf9 = {2, 2, 1};      // x^2 + 2x + 2
    if (p == 2 && k == 2) return &gf4;
    if (p == 2 && k == 3) return &gf8;
    if (p == 3 && k == 2) return &gf9;
    return nullptr;
}

}  // namespace

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= static_cast<uint64_t>(p);
    q_ = static_cast<uint32_t>(q);
    one_ = index_of_rep([&] {
        std::vector<int> rep(k_, 0);
        rep[0] = 1;
        return rep;
    }());
    build_tables();
}

std::shared_ptr<const Field> Field::make(int p, int k,
                                         std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw NonPrimeCharacteristic("p = " + std::to_string(p));
    if (k < 1) throw DegreeMismatch("extension degree must be >= 1");
    uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<uint64_t>(p);
        if (q > kMaxOrder) throw DegreeMismatch("field order exceeds 2^16");
    }

    std::vector<int> mod_poly;
    if (k == 1) {
        if (modulus.has_value())
            throw DegreeMismatch("modulus must be omitted for prime fields");
    } else {
        if (!modulus.has_value()) {
            const auto* def = default_modulus(p, k);
            if (!def)
                throw DegreeMismatch("modulus required for GF(" + std::to_string(q) + ")");
            modulus = *def;
        }
        mod_poly = *modulus;
        if (static_cast<int>(mod_poly.size()) != k + 1)
            throw DegreeMismatch("modulus needs k+1 coefficients, constant term first");
        for (int& c : mod_poly) c = ((c % p) + p) % p;
        if (mod_poly[k] != 1)
            throw DegreeMismatch("modulus must be monic of degree k");
        if (!is_irreducible(mod_poly, p, k))
            throw ReducibleModulus("modulus factors over GF(" + std::to_string(p) + ")");
    }
    return std::shared_ptr<const Field>(new Field(p, k, std::move(mod_poly)));
}

std::vector<int> Field::rep_of(uint32_t idx) const {
    std::vector<int> rep(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        rep[i] = static_cast<int>(idx % static_cast<uint32_t>(p_));
        idx /= static_cast<uint32_t>(p_);
    }
    return rep;
}

uint32_t Field::index_of_rep(const std::vector<int>& rep) const {
    if (static_cast<int>(rep.size()) != k_)
        throw DegreeMismatch("coefficient vector has wrong length");
    uint32_t idx = 0;
    for (int i = 0; i < k_; ++i) {
        int c = ((rep[i] % p_) + p_) % p_;
        idx = idx * static_cast<uint32_t>(p_) + static_cast<uint32_t>(c);
    }
    return idx;
}

uint32_t Field::add_raw(uint32_t a, uint32_t b) const {
    if (k_ == 1) return (a + b) % static_cast<uint32_t>(p_);
    auto ra = rep_of(a), rb = rep_of(b);
    for (int i = 0; i < k_; ++i) ra[i] = (ra[i] + rb[i]) % p_;
    return index_of_rep(ra);
}

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
    if (k_ == 1)
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % static_cast<uint32_t>(p_));
    auto ra = rep_of(a), rb = rep_of(b);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (ra[i] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + ra[i] * rb[j]) % p_;
    }
    auto rem = poly_mod(std::move(prod), modulus_, p_);
    rem.resize(k_, 0);
    return index_of_rep(rem);
}

uint32_t Field::inv_raw(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    // a^(q-2); exponentiation avoids a separate extended-Euclid path
    uint32_t result = one_;
    uint32_t base = a;
    uint32_t e = q_ - 2;
    while (e > 0) {
        if (e & 1u) result = mul_raw(result, base);
        base = mul_raw(base, base);
        e >>= 1u;
    }
    return result;
}

void Field::build_tables() {
    if (q_ > kTableLimit) return;
    add_table_.resize(static_cast<size_t>(q_) * q_);
    mul_table_.resize(static_cast<size_t>(q_) * q_);
    inv_table_.assign(q_, 0);
    for (uint32_t a = 0; a < q_; ++a) {
        for (uint32_t b = 0; b < q_; ++b) {
            add_table_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(add_raw(a, b));
            mul_table_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(mul_raw(a, b));
        }
        if (a != 0) inv_table_[a] = inv_raw(a);
    }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * q_ + b];
    return add_raw(a, b);
}

uint32_t Field::neg(uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : static_cast<uint32_t>(p_) - a;
    auto r = rep_of(a);
    for (int& c : r) c = (p_ - c) % p_;
    return index_of_rep(r);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
    return mul_raw(a, b);
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    if (!inv_table_.empty()) return inv_table_[a];
    return inv_raw(a);
}

uint32_t Field::div(uint32_t a, uint32_t b) const {
    if (b == 0) throw DivisionByZero("division by zero field element");
    return mul(a, inv(b));
}

FieldElement Field::element(uint32_t idx) const {
    if (idx >= q_) throw DegreeMismatch("element index out of range");
    return {this, idx};
}

FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, one_}; }

FieldElement Field::from_rep(const std::vector<int>& rep) const {
    return {this, index_of_rep(rep)};
}

std::string Field::element_str(uint32_t idx) const {
    if (k_ == 1) return std::to_string(idx);
    auto rep = rep_of(idx);
    std::string s = "(";
    for (int i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(rep[i]);
    }
    return s + ")";
}

bool same_field(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw MixedFields("operands live in different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {&a.field(), a.field().add(a.index(), b.index())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {&a.field(), a.field().sub(a.index(), b.index())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {&a.field(), a.field().mul(a.index(), b.index())};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {&a.field(), a.field().div(a.index(), b.index())};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(a.field(), b.field()) && a.index() == b.index();
}

}  // namespace nrt
