#include "nrt/transfer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nrt/errors.hpp"

namespace nrt {

Diagonalization diagonalize_involution(const RatMatrix& sigma) {
    if (sigma.rows() != sigma.cols()) throw NotInvolution("matrix is not square");
    const int n = sigma.rows();
    if (!(sigma * sigma).is_identity()) throw NotInvolution("sigma^2 != I");

    auto st = sigma.transposed();
    auto minus_i = st - RatMatrix::identity(n);
    auto plus_i = st + RatMatrix::identity(n);
    auto plus_rows = kernel(minus_i);   // sigma^T v = v  -> row * sigma = row
    auto minus_rows = kernel(plus_i);   // sigma^T v = -v -> row * sigma = -row

    RatMatrix t(n, n);
    int r = 0;
    for (const auto& v : plus_rows) {
        for (int j = 0; j < n; ++j) t.at(r, j) = v[j];
        ++r;
    }
    for (const auto& v : minus_rows) {
        for (int j = 0; j < n; ++j) t.at(r, j) = v[j];
        ++r;
    }
    if (r != n) throw NotInvolution("eigenspaces do not span");  // unreachable for involutions
    return {std::move(t), static_cast<int>(plus_rows.size()),
            static_cast<int>(minus_rows.size())};
}

std::string GenSource::str() const {
    switch (kind) {
        case Kind::Variable:
            return "x" + std::to_string(i);
        case Kind::Product:
            return "x" + std::to_string(i) + "*x" + std::to_string(j);
        case Kind::Basis:
            return "deg" + std::to_string(i) + "#" + std::to_string(j);
    }
    return "?";
}

std::vector<MultiPoly> GeneratorSet::polys() const {
    std::vector<MultiPoly> out;
    out.reserve(items.size());
    for (const auto& g : items) out.push_back(g.poly);
    return out;
}

std::vector<int> GeneratorSet::degrees() const {
    std::vector<int> out;
    out.reserve(items.size());
    for (const auto& g : items) out.push_back(g.degree);
    return out;
}

GeneratorSet diagonal_invariant_generators(int m) {
    if (m < 2 || m % 2 != 0) throw OddM("m must be even and positive");
    const int nvars = m + 1;
    const int half = m / 2;
    GeneratorSet out;
    for (int i = 0; i <= half; ++i) {
        out.items.push_back({MultiPoly::variable(nvars, i), 1,
                             {GenSource::Kind::Variable, i, -1}});
    }
    for (int i = half + 1; i <= m; ++i) {
        for (int j = i; j <= m; ++j) {
            Monomial mono(nvars, 0);
            mono[i] += 1;
            mono[j] += 1;
            out.items.push_back({MultiPoly::from_term(mono, 1), 2,
                                 {GenSource::Kind::Product, i, j}});
        }
    }
    return out;
}

RatMatrix closed_form_diagonalizer(long long q, int m) {
    if (q < 2) throw DegreeMismatch("q must be at least 2");
    const Rational Q(q);
    if (m == 2) {
        return RatMatrix::from_rows({
            {(Q + 1) / Q, (Q - 1) / Q, Q - 1},
            {1, -1, Q},
            {1, -1, -Q},
        });
    }
    if (m == 4) {
        const Rational Q2 = Q * Q;
        return RatMatrix::from_rows({
            {(Q2 + 1) / Q2, (Q - 1) / Q2, (Q - 1) / Q, Q - 1, Q2 - Q},
            {1, Q - 1, 2 * Q2 - Q, -Q2, 0},
            {1, -1, 0, 0, Q2},
            {(1 - Q2) / Q2, (Q - 1) / Q2, (Q - 1) / Q, Q - 1, Q2 - Q},
            {1, Q - 1, -Q, -Q2, 0},
        });
    }
    if (m == 6) {
        const Rational Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q;
        return RatMatrix::from_rows({
            {1, Q - 1, Q3 + Q2 - Q, Q3 - Q2, Q4 - Q3, -Q4, 0},
            {1, -1, 0, 0, 0, 0, Q3},
            {(Q3 + 1) / Q3, (Q - 1) / Q3, (Q - 1) / Q2, (Q - 1) / Q, Q - 1, Q2 - Q, Q3 - Q2},
            {1, Q - 1, Q2 - Q, 2 * Q3 - Q2, -Q3, 0, 0},
            {1, Q - 1, Q2 - Q, -Q2, -Q3, 0, 0},
            {1, Q - 1, -Q3 + Q2 - Q, Q3 - Q2, Q4 - Q3, -Q4, 0},
            {(1 - Q3) / Q3, (Q - 1) / Q3, (Q - 1) / Q2, (Q - 1) / Q, Q - 1, Q2 - Q, Q3 - Q2},
        });
    }
    throw DegreeMismatch("closed-form T is only available for m in {2, 4, 6}");
}

GeneratorSet transfer_generators(const RatMatrix& t, const GeneratorSet& a) {
    GeneratorSet out;
    out.items.reserve(a.items.size());
    for (const auto& g : a.items) {
        if (t.rows() != g.poly.nvars())
            throw DimensionMismatch("basis matrix size != variable count");
        out.items.push_back({substitute_linear(t, g.poly), g.degree, g.source});
    }
    return out;
}

bool RelationReport::all_hold() const {
    return std::all_of(checked.begin(), checked.end(),
                       [](const Entry& e) { return e.holds; });
}

RelationReport verify_relations(const GeneratorSet& b) {
    // collect the transferred quadratic monomial generators by index pair
    std::map<std::pair<int, int>, const MultiPoly*> quad;
    for (const auto& g : b.items)
        if (g.source.kind == GenSource::Kind::Product)
            quad[{g.source.i, g.source.j}] = &g.poly;

    auto name = [](std::pair<int, int> p) {
        return "z" + std::to_string(p.first) + std::to_string(p.second);
    };
    auto sorted = [](int x, int y) {
        return std::make_pair(std::min(x, y), std::max(x, y));
    };

    using Pair = std::pair<int, int>;
    using Side = std::pair<Pair, Pair>;  // unordered product of two generators
    auto side = [](Pair a, Pair b) { return a <= b ? Side{a, b} : Side{b, a}; };
    std::set<std::pair<Side, Side>> seen;

    RelationReport report;
    for (auto it = quad.begin(); it != quad.end(); ++it) {
        for (auto jt = it; jt != quad.end(); ++jt) {
            auto [i, j] = it->first;
            auto [k, l] = jt->first;
            auto lhs_side = side(it->first, jt->first);
            // the two nontrivial re-pairings of {i, j, k, l}
            for (auto [p1, p2] : {std::make_pair(sorted(i, k), sorted(j, l)),
                                  std::make_pair(sorted(i, l), sorted(j, k))}) {
                auto rhs_side = side(p1, p2);
                if (rhs_side == lhs_side) continue;
                auto identity = lhs_side <= rhs_side ? std::make_pair(lhs_side, rhs_side)
                                                     : std::make_pair(rhs_side, lhs_side);
                if (!seen.insert(identity).second) continue;
                auto a1 = quad.find(p1);
                auto a2 = quad.find(p2);
                if (a1 == quad.end() || a2 == quad.end()) continue;
                bool ok = (*it->second * *jt->second) == (*a1->second * *a2->second);
                report.checked.push_back(
                    {name(it->first) + "*" + name(jt->first) + " = " + name(p1) + "*" + name(p2),
                     ok});
                if (!ok)
                    throw RelationViolated(report.checked.back().relation +
                                           " fails for the transferred generators");
            }
        }
    }
    return report;
}

namespace {

// Exponent vectors over the generators with the prescribed weighted degree.
void weighted_monomials(const std::vector<int>& degrees, int pos, int remaining,
                        Monomial& scratch, std::vector<Monomial>& out) {
    if (pos == static_cast<int>(degrees.size())) {
        if (remaining == 0) out.push_back(scratch);
        return;
    }
    int maxe = remaining / degrees[pos];
    for (int e = maxe; e >= 0; --e) {
        scratch[pos] = e;
        weighted_monomials(degrees, pos + 1, remaining - e * degrees[pos], scratch, out);
    }
    scratch[pos] = 0;
}

// Power cache so candidate expansion reuses earlier products.
class GenPowers {
public:
    explicit GenPowers(const GeneratorSet& b) : b_(b) {}

    const MultiPoly& power(int i, int e) {
        auto& cache = cache_[i];
        if (cache.empty())
            cache.push_back(MultiPoly::constant(b_.items[i].poly.nvars(), 1));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * b_.items[i].poly);
        return cache[e];
    }

    MultiPoly expand(const Monomial& alpha) {
        int nvars = b_.items.empty() ? 1 : b_.items[0].poly.nvars();
        MultiPoly acc = MultiPoly::constant(nvars, 1);
        for (size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] > 0) acc = acc * power(static_cast<int>(i), alpha[i]);
        return acc;
    }

private:
    const GeneratorSet& b_;
    std::map<int, std::vector<MultiPoly>> cache_;
};

}  // namespace

std::optional<MultiPoly> rewrite_in_generators(const MultiPoly& p, const GeneratorSet& b) {
    const int s = static_cast<int>(b.items.size());
    MultiPoly result(s == 0 ? 1 : s);
    if (p.is_zero()) return result;
    if (s == 0) return std::nullopt;

    for (const auto& g : b.items)
        if (g.poly.nvars() != p.nvars())
            throw VariableCountMismatch("generators and target over different variables");

    auto degrees = b.degrees();
    GenPowers powers(b);

    // group the target by total degree; each graded piece is solved alone
    std::map<int, MultiPoly> pieces;
    for (const auto& [mono, c] : p.terms()) {
        int d = total_degree(mono);
        auto [it, inserted] = pieces.emplace(d, MultiPoly(p.nvars()));
        it->second.add_term(mono, c);
    }

    for (const auto& [d, piece] : pieces) {
        std::vector<Monomial> cands;
        Monomial scratch(s, 0);
        weighted_monomials(degrees, 0, d, scratch, cands);
        std::sort(cands.begin(), cands.end(), GrlexGreater{});
        if (cands.empty()) return std::nullopt;

        auto xmons = monomial_basis(p.nvars(), d);
        RatMatrix system(static_cast<int>(xmons.size()), static_cast<int>(cands.size()));
        std::map<Monomial, int, GrlexGreater> row_of;
        for (size_t r = 0; r < xmons.size(); ++r) row_of[xmons[r]] = static_cast<int>(r);
        for (size_t c = 0; c < cands.size(); ++c) {
            auto expanded = powers.expand(cands[c]);
            for (const auto& [mono, coeff] : expanded.terms())
                system.at(row_of.at(mono), static_cast<int>(c)) = coeff;
        }
        auto rhs = piece.coords(xmons);
        auto solution = solve_with_free_zero(system, rhs);
        if (!solution) return std::nullopt;
        for (size_t c = 0; c < cands.size(); ++c)
            result.add_term(cands[c], (*solution)[c]);
    }

    // the defining property of the output; failure here is a library bug
    if (expand_in_generators(result, b) != p)
        throw RelationViolated("rewrite verification failed");
    return result;
}

MultiPoly expand_in_generators(const MultiPoly& expr, const GeneratorSet& b) {
    if (b.items.empty()) throw DimensionMismatch("empty generator set");
    if (expr.nvars() != static_cast<int>(b.items.size()))
        throw VariableCountMismatch("expression variables != generator count");
    GenPowers powers(b);
    int nvars = b.items[0].poly.nvars();
    MultiPoly out(nvars);
    for (const auto& [alpha, c] : expr.terms())
        out = out + powers.expand(alpha).scaled(c);
    return out;
}

}  // namespace nrt
