#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/linalg.hpp"
#include "nrt/rational.hpp"

namespace nrt {

// Exponent vector; length = number of variables.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded lexicographic, largest first: higher total degree wins, ties broken
// lexicographically on the exponent vector (so x0^2 > x0*x1 > ... > x2^2).
// Canonical term order for storage, printing and matrix columns.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int i);
    static MultiPoly from_term(Monomial m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(int e) const;

    MultiPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Extract the sum of terms of exact total degree d.
    MultiPoly homogeneous_part(int d) const;

    // Coefficients against an ordered monomial list (e.g. monomial_basis).
    std::vector<Rational> coords(const std::vector<Monomial>& basis) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Canonical text form: terms in grlex order, "p/q" coefficients,
    // "x0^2*x1" monomials, unit coefficients and exponents elided.
    // Round-trips exactly through parse().
    std::string str(const std::vector<std::string>* names = nullptr) const;

    static MultiPoly parse(std::string_view text, int nvars,
                           const std::string& var_prefix = "x", int index_base = 0);

private:
    void check_compatible(const MultiPoly& other) const;

    int nvars_;
    TermMap terms_;
};

// Linear change of variables with the row convention: x_i is replaced by the
// linear form given by row i of M. Ring homomorphism; composing two
// substitutions satisfies sub(A, sub(B, p)) == sub(B*A, p).
MultiPoly substitute_linear(const RatMatrix& m, const MultiPoly& p);

// All monomials of total degree d in `nvars` variables, grlex order
// (largest first). C(d + nvars - 1, nvars - 1) of them.
std::vector<Monomial> monomial_basis(int nvars, int d);

}  // namespace nrt
