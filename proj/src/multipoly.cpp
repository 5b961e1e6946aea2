#include "nrt/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nrt/errors.hpp"

namespace nrt {

int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw VariableCountMismatch("variable index out of range");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

MultiPoly MultiPoly::from_term(Monomial m, const Rational& c) {
    MultiPoly p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

int MultiPoly::degree() const {
    // grlex order: the first term has maximal total degree
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw VariableCountMismatch("exponent vector length != variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (nvars_ != other.nvars_)
        throw VariableCountMismatch("polynomials over different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly out(nvars_);
    Monomial sum(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) sum[i] = ma[i] + mb[i];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw DomainError("NegativeExponent", "polynomial powers must be >= 0");
    MultiPoly result = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) result = result * *this;
    return result;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw VariableCountMismatch("derivative variable out of range");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * m[var]);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw VariableCountMismatch("evaluation point length != variable count");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d) out.terms_.emplace(m, c);
    return out;
}

std::vector<Rational> MultiPoly::coords(const std::vector<Monomial>& basis) const {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) v[i] = coeff(basis[i]);
    return v;
}

std::string MultiPoly::str(const std::vector<std::string>* names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int i) {
        if (names) return (*names)[i];
        return "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant_term = total_degree(m) == 0;
        bool need_coeff = constant_term || a != 1;
        if (need_coeff) os << rat_str(a);
        bool need_star = need_coeff;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(i);
            if (m[i] > 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    std::string_view s;
    size_t i = 0;
    int nvars;
    const std::string& prefix;
    int index_base;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(i) + " in '" + std::string(s) +
                         "'");
    }

    BigInt parse_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected digits");
        BigInt v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }

    int parse_small_uint() {
        BigInt v = parse_uint();
        if (v > 1000000) fail("index or exponent too large");
        return static_cast<int>(v);
    }

    // factor := rational | var [^ exp]
    void parse_factor(Monomial& mono, Rational& coeff) {
        skip_ws();
        if (i >= s.size()) fail("expected factor");
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            BigInt num = parse_uint();
            BigInt den = 1;
            if (eat('/')) den = parse_uint();
            if (den == 0) throw DivisionByZero("zero denominator in polynomial literal");
            coeff *= Rational(num, den);
            return;
        }
        if (s.compare(i, prefix.size(), prefix) == 0 && i + prefix.size() < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + prefix.size()]))) {
            i += prefix.size();
            int idx = parse_small_uint() - index_base;
            if (idx < 0 || idx >= nvars) fail("variable index out of range");
            int exp = 1;
            if (eat('^')) exp = parse_small_uint();
            mono[idx] += exp;
            return;
        }
        fail("expected coefficient or variable");
    }

    MultiPoly parse() {
        MultiPoly out(nvars);
        skip_ws();
        if (i == s.size()) fail("empty polynomial");
        bool any = false;
        while (true) {
            skip_ws();
            if (i == s.size()) break;
            int sign = 1;
            if (eat('+')) {
            } else if (eat('-')) {
                sign = -1;
            } else if (any) {
                fail("expected '+' or '-'");
            }
            Monomial mono(nvars, 0);
            Rational coeff = sign;
            parse_factor(mono, coeff);
            while (eat('*')) parse_factor(mono, coeff);
            out.add_term(mono, coeff);
            any = true;
        }
        if (!any) fail("empty polynomial");
        return out;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, int nvars, const std::string& var_prefix,
                           int index_base) {
    if (nvars <= 0) throw VariableCountMismatch("variable count must be positive");
    // special case: a lone "0"
    PolyParser p{text, 0, nvars, var_prefix, index_base};
    return p.parse();
}

MultiPoly substitute_linear(const RatMatrix& m, const MultiPoly& p) {
    if (m.rows() != m.cols()) throw DimensionMismatch("substitution matrix must be square");
    if (m.rows() != p.nvars())
        throw DimensionMismatch("substitution matrix size != variable count");
    int n = p.nvars();

    // linear form for each variable that actually occurs
    std::vector<MultiPoly> form(n, MultiPoly(n));
    std::vector<bool> have_form(n, false);
    auto get_form = [&](int i) -> const MultiPoly& {
        if (!have_form[i]) {
            MultiPoly f(n);
            Monomial mono(n, 0);
            for (int j = 0; j < n; ++j) {
                if (m.at(i, j).is_zero()) continue;
                mono[j] = 1;
                f.add_term(mono, m.at(i, j));
                mono[j] = 0;
            }
            form[i] = std::move(f);
            have_form[i] = true;
        }
        return form[i];
    };

    // powers are shared across terms, so cache them
    std::vector<std::vector<MultiPoly>> powers(n);
    auto get_power = [&](int i, int e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(n, 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * get_form(i));
        return cache[e];
    };

    MultiPoly out(n);
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (mono[i] > 0) term = term * get_power(i, mono[i]);
        out = out + term;
    }
    return out;
}

namespace {
void fill_monomials(int nvars, int pos, int remaining, Monomial& scratch,
                    std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        scratch[pos] = remaining;
        out.push_back(scratch);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        scratch[pos] = e;
        fill_monomials(nvars, pos + 1, remaining - e, scratch, out);
    }
    scratch[pos] = 0;
}
}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int d) {
    if (nvars <= 0) throw VariableCountMismatch("variable count must be positive");
    if (d < 0) return {};
    std::vector<Monomial> out;
    Monomial scratch(nvars, 0);
    fill_monomials(nvars, 0, d, scratch, out);
    return out;
}

}  // namespace nrt
