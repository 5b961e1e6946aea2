#include "nrt/reynolds.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nrt/errors.hpp"

namespace nrt {

namespace {

std::vector<Rational> flatten(const RatMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

MultiPoly poly_from_coords(const std::vector<Rational>& coords,
                           const std::vector<Monomial>& mons, int nvars) {
    MultiPoly p(nvars);
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) p.add_term(mons[i], coords[i]);
    return p;
}

// Determinant by Laplace expansion along the first row; the matrices here
// are small (one row per variable).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, int nvars) {
    const int n = static_cast<int>(m.size());
    if (n == 1) return m[0][0];
    MultiPoly det(nvars);
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (int i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        auto cofactor = m[0][j] * poly_determinant(minor, nvars);
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

}  // namespace

MatrixGroup group_closure(const std::vector<RatMatrix>& gens, size_t cap) {
    if (gens.empty()) throw DimensionMismatch("no generators given");
    const int n = gens[0].rows();
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n)
            throw DimensionMismatch("generators must be square and of equal size");
        if (rref(g).rank != n) throw SingularMatrix("generator is not invertible");
    }

    MatrixGroup group;
    group.dim = n;
    std::map<std::vector<Rational>, size_t> seen;

    auto push = [&](const RatMatrix& m) -> bool {
        auto key = flatten(m);
        if (seen.count(key)) return false;
        if (group.elements.size() >= cap)
            throw CapExceeded("group closure passed " + std::to_string(cap) + " elements");
        seen.emplace(std::move(key), group.elements.size());
        group.elements.push_back(m);
        return true;
    };

    push(RatMatrix::identity(n));
    for (const auto& g : gens) {
        if (push(g)) group.generators.push_back(g);
    }
    // all generators may equal the identity
    if (group.generators.empty()) group.generators.push_back(RatMatrix::identity(n));

    // breadth-first: every word in the generators eventually appears
    for (size_t head = 0; head < group.elements.size(); ++head) {
        for (const auto& g : group.generators) {
            push(group.elements[head] * g);
        }
    }
    return group;
}

MultiPoly reynolds_average(const MultiPoly& p, const MatrixGroup& g) {
    if (p.nvars() != g.dim)
        throw DimensionMismatch("polynomial variables != group dimension");
    MultiPoly sum(p.nvars());
    for (const auto& e : g.elements) sum = sum + substitute_linear(e, p);
    return sum.scaled(Rational(1, static_cast<long long>(g.order())));
}

std::vector<MultiPoly> invariant_basis(const MatrixGroup& g, int d) {
    if (d < 0) return {};
    if (d == 0) return {MultiPoly::constant(g.dim, 1)};
    auto mons = monomial_basis(g.dim, d);
    RowSpan span(static_cast<int>(mons.size()));
    for (const auto& mono : mons)
        span.insert(reynolds_average(MultiPoly::from_term(mono, 1), g).coords(mons));
    std::vector<MultiPoly> basis;
    basis.reserve(span.rank());
    for (const auto& row : span.rows())
        basis.push_back(poly_from_coords(row, mons, g.dim));
    return basis;
}

GeneratorSet minimal_generators(const MatrixGroup& g, int maxdeg) {
    if (maxdeg < 1) throw DegreeMismatch("maxdeg must be at least 1");
    GeneratorSet out;
    for (int d = 1; d <= maxdeg; ++d) {
        auto inv = invariant_basis(g, d);
        if (inv.empty()) continue;
        auto mons = monomial_basis(g.dim, d);

        // span of products of already-emitted generators with weight d
        RowSpan span(static_cast<int>(mons.size()));
        std::vector<int> degs = out.degrees();
        std::vector<Monomial> products;
        if (!degs.empty()) {
            Monomial scratch(degs.size(), 0);
            // reuse the weighted-monomial recursion shape: products of
            // earlier generators whose degrees sum to exactly d
            std::vector<Monomial> alphas;
            std::function<void(int, int)> rec = [&](int pos, int remaining) {
                if (pos == static_cast<int>(degs.size())) {
                    if (remaining == 0) alphas.push_back(scratch);
                    return;
                }
                int maxe = remaining / degs[pos];
                for (int e = maxe; e >= 0; --e) {
                    scratch[pos] = e;
                    rec(pos + 1, remaining - e * degs[pos]);
                }
                scratch[pos] = 0;
            };
            rec(0, d);
            for (const auto& alpha : alphas) {
                if (std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; }))
                    continue;
                MultiPoly prod = MultiPoly::constant(g.dim, 1);
                for (size_t i = 0; i < alpha.size(); ++i)
                    for (int e = 0; e < alpha[i]; ++e) prod = prod * out.items[i].poly;
                span.insert(prod.coords(mons));
            }
        }

        // canonical complement: residuals of the invariant basis vectors
        int ordinal = 0;
        for (const auto& v : inv) {
            auto inserted = span.insert(v.coords(mons));
            if (!inserted) continue;
            out.items.push_back({poly_from_coords(*inserted, mons, g.dim), d,
                                 {GenSource::Kind::Basis, d, ordinal++}});
        }
    }
    return out;
}

bool jacobian_independent(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) throw ShapeMismatch("no polynomials given");
    const int nvars = polys[0].nvars();
    if (static_cast<int>(polys.size()) != nvars)
        throw ShapeMismatch("need exactly one polynomial per variable");
    std::vector<std::vector<MultiPoly>> jac;
    jac.reserve(polys.size());
    for (const auto& f : polys) {
        if (f.nvars() != nvars) throw ShapeMismatch("mixed variable counts");
        std::vector<MultiPoly> row;
        row.reserve(nvars);
        for (int j = 0; j < nvars; ++j) row.push_back(f.derivative(j));
        jac.push_back(std::move(row));
    }
    return !poly_determinant(jac, nvars).is_zero();
}

}  // namespace nrt
