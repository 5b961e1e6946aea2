#include "nrt/verify.hpp"

#include <json.hpp>

#include <array>
#include <ostream>
#include <sstream>

#include "nrt/errors.hpp"
#include "nrt/macwilliams.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/reynolds.hpp"
#include "nrt/transfer.hpp"

namespace nrt {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

RatMatrix sign_diagonal(int m) {
    RatMatrix d = RatMatrix::identity(m + 1);
    for (int i = m / 2 + 1; i <= m; ++i) d.at(i, i) = -1;
    return d;
}

const MultiPoly* find_product(const GeneratorSet& b, int i, int j) {
    for (const auto& g : b.items)
        if (g.source.kind == GenSource::Kind::Product && g.source.i == i && g.source.j == j)
            return &g.poly;
    return nullptr;
}

// T contract + transferred relations shared by the m = 4 and m = 6 groups.
void check_transfer_for(std::vector<CheckResult>& out, long long q, int m,
                        const std::vector<std::array<int, 4>>& relations) {
    auto label = [&](const std::string& what) {
        return "m=" + std::to_string(m) + " q=" + std::to_string(q) + ": " + what;
    };
    auto t = closed_form_diagonalizer(q, m);
    auto sv = sigma_matrix(q, m);
    check(out, label("closed-form T diagonalizes sigma"), t * sv == sign_diagonal(m) * t);

    auto b = transfer_generators(t, diagonal_invariant_generators(m));
    size_t expected = static_cast<size_t>(m / 2 + 1) + static_cast<size_t>(m / 2) * (m / 2 + 1) / 2;
    check(out, label("generator count"), b.size() == expected);

    bool invariant = true;
    for (const auto& g : b.items)
        invariant = invariant && substitute_linear(sv, g.poly) == g.poly;
    check(out, label("all transferred generators fixed by sigma"), invariant);

    for (const auto& r : relations) {
        const auto* aa = find_product(b, r[0], r[0]);
        const auto* bb = find_product(b, r[1], r[1]);
        const auto* ab = find_product(b, r[2], r[3]);
        bool ok = aa && bb && ab && (*ab * *ab == *aa * *bb);
        check(out,
              label("relation im(x" + std::to_string(r[2]) + "*x" + std::to_string(r[3]) +
                    ")^2 = im(x" + std::to_string(r[0]) + "^2)*im(x" + std::to_string(r[1]) +
                    "^2)"),
              ok);
    }
}

}  // namespace

std::vector<CheckResult> verify_m2_transfer() {
    std::vector<CheckResult> out;
    const long long q = 2;
    const int m = 2;
    auto t = closed_form_diagonalizer(q, m);
    auto sv = sigma_matrix(q, m);
    check(out, "m=2 q=2: closed-form T diagonalizes sigma", t * sv == sign_diagonal(m) * t);

    auto b = transfer_generators(t, diagonal_invariant_generators(m));
    auto g1 = MultiPoly::parse("3/2*x0 + 1/2*x1 + x2", 3);
    auto g2 = MultiPoly::parse("x0 - x1 + 2*x2", 3);
    auto lin3 = MultiPoly::parse("x0 - x1 - 2*x2", 3);
    check(out, "m=2 q=2: transferred generators match the closed forms",
          b.size() == 3 && b.items[0].poly == g1 && b.items[1].poly == g2 &&
              b.items[2].poly == lin3 * lin3);

    auto phi1 = MultiPoly::parse("x0 + x2", 3);
    auto phi2 = MultiPoly::parse("x0 + x1", 3);
    auto phi3 = MultiPoly::parse("x0^2 + x1^2 + 2*x2^2", 3);

    auto r1 = rewrite_in_generators(phi1, b);
    auto r2 = rewrite_in_generators(phi2, b);
    auto r3 = rewrite_in_generators(phi3, b);
    check(out, "m=2 q=2: phi_1 = 1/2 g1 + 1/4 g2",
          r1 && *r1 == MultiPoly::parse("1/2*g1 + 1/4*g2", 3, "g", 1));
    check(out, "m=2 q=2: phi_2 = g1 - 1/2 g2",
          r2 && *r2 == MultiPoly::parse("g1 - 1/2*g2", 3, "g", 1));
    check(out, "m=2 q=2: phi_3 = 1/2 g1^2 - 1/2 g1 g2 + 3/8 g2^2 + 1/4 g3",
          r3 && *r3 == MultiPoly::parse("1/2*g1^2 - 1/2*g1*g2 + 3/8*g2^2 + 1/4*g3", 3, "g", 1));

    GeneratorSet d;
    d.items.push_back({phi1, 1, {GenSource::Kind::Basis, 1, 0}});
    d.items.push_back({phi2, 1, {GenSource::Kind::Basis, 1, 1}});
    d.items.push_back({phi3, 2, {GenSource::Kind::Basis, 2, 0}});
    auto i1 = rewrite_in_generators(b.items[0].poly, d);
    auto i2 = rewrite_in_generators(b.items[1].poly, d);
    auto i3 = rewrite_in_generators(b.items[2].poly, d);
    check(out, "m=2 q=2: g1 = phi1 + 1/2 phi2",
          i1 && *i1 == MultiPoly::parse("f1 + 1/2*f2", 3, "f", 1));
    check(out, "m=2 q=2: g2 = 2 phi1 - phi2",
          i2 && *i2 == MultiPoly::parse("2*f1 - f2", 3, "f", 1));
    check(out, "m=2 q=2: g3 = 4 phi3 - 3 phi2^2 + 4 phi1 phi2 - 4 phi1^2",
          i3 && *i3 == MultiPoly::parse("4*f3 - 3*f2^2 + 4*f1*f2 - 4*f1^2", 3, "f", 1));

    check(out, "m=2: no relations among the transferred generators",
          verify_relations(b).checked.empty());
    return out;
}

std::vector<CheckResult> verify_m4_transfer() {
    std::vector<CheckResult> out;
    for (long long q : {2, 3}) check_transfer_for(out, q, 4, {{{3, 4, 3, 4}}});
    return out;
}

std::vector<CheckResult> verify_m6_transfer() {
    std::vector<CheckResult> out;
    for (long long q : {2, 3})
        check_transfer_for(out, q, 6, {{{4, 5, 4, 5}}, {{4, 6, 4, 6}}, {{5, 6, 5, 6}}});
    return out;
}

std::vector<CheckResult> verify_order6_group() {
    std::vector<CheckResult> out;
    auto tau = RatMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    auto sigma2 = sigma_matrix(2, 2);

    auto g = group_closure({tau, sigma2});
    check(out, "q=2: group generated by tau and sigma has order 6", g.order() == 6);

    bool q3_infinite = false;
    try {
        group_closure({tau, sigma_matrix(3, 2)}, 200);
    } catch (const CapExceeded&) {
        q3_infinite = true;
    }
    check(out, "q=3: closure exceeds a 200-element cap", q3_infinite);

    auto f1 = MultiPoly::parse("x0 + x2", 3);
    auto f2 = MultiPoly::parse("x0^2 + x1^2 + 2*x2^2", 3);
    auto f3 = MultiPoly::parse("x0^3 + 3*x0*x2^2 + 3*x1^2*x2 + x2^3", 3);
    auto h = MultiPoly::parse("x0^2*x1 - 4*x0*x1*x2 - x1^3 + 4*x1*x2^2", 3);

    auto k = group_closure({tau * sigma2});
    check(out, "subgroup generated by tau*sigma has order 3", k.order() == 3);

    bool k_invariant = true;
    for (const auto& e : k.elements)
        for (const auto* f : {&f1, &f2, &f3, &h})
            k_invariant = k_invariant && substitute_linear(e, *f) == *f;
    check(out, "f1, f2, f3, h fixed by the order-3 subgroup", k_invariant);

    bool g_invariant = true;
    for (const auto& e : g.elements)
        for (const auto* f : {&f1, &f2, &f3})
            g_invariant = g_invariant && substitute_linear(e, *f) == *f;
    check(out, "f1, f2, f3 fixed by the whole group", g_invariant);

    check(out, "h is negated by tau", substitute_linear(tau, h) == -h);

    auto relation = h * h + f1.pow(6).scaled(Rational(1, 3)) - (f1.pow(4) * f2).scaled(2) +
                    (f1.pow(3) * f3).scaled(Rational(2, 3)) + (f1 * f1 * f2 * f2).scaled(5) -
                    (f1 * f2 * f3).scaled(6) - f2.pow(3) + (f3 * f3).scaled(3);
    check(out, "h^2 relation in f1, f2, f3 vanishes identically", relation.is_zero());

    check(out, "f1, f2, f3 have a nonzero Jacobian determinant",
          jacobian_independent({f1, f2, f3}));

    auto gens = minimal_generators(g, 6);
    check(out, "minimal generators of the order-6 group have degrees [1,2,3]",
          gens.degrees() == std::vector<int>({1, 2, 3}));

    // per-degree spans agree with the known generators
    auto span_eq = [](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                      int nvars, int d) {
        auto mons = monomial_basis(nvars, d);
        RowSpan sa(static_cast<int>(mons.size())), sb(static_cast<int>(mons.size()));
        for (const auto& p : a) sa.insert(p.coords(mons));
        for (const auto& p : b) sb.insert(p.coords(mons));
        if (sa.rank() != sb.rank()) return false;
        for (const auto& p : b)
            if (!sa.contains(p.coords(mons))) return false;
        return true;
    };
    check(out, "degree-1 invariants span {f1}", span_eq(invariant_basis(g, 1), {f1}, 3, 1));
    check(out, "degree-2 invariants span {f1^2, f2}",
          span_eq(invariant_basis(g, 2), {f1 * f1, f2}, 3, 2));
    check(out, "degree-3 invariants span {f1^3, f1 f2, f3}",
          span_eq(invariant_basis(g, 3), {f1.pow(3), f1 * f2, f3}, 3, 3));
    return out;
}

bool run_worked_example_checks(std::ostream& out, bool json) {
    struct Group {
        const char* name;
        std::vector<CheckResult> (*run)();
    };
    const Group groups[] = {
        {"m=2 transfer basis and rewrites", verify_m2_transfer},
        {"m=4 transfer basis and relation", verify_m4_transfer},
        {"m=6 transfer basis and relations", verify_m6_transfer},
        {"order-6 group invariants", verify_order6_group},
    };

    bool all_ok = true;
    nlohmann::json jout = nlohmann::json::array();
    for (const auto& group : groups) {
        auto results = group.run();
        bool ok = true;
        for (const auto& r : results) ok = ok && r.ok;
        all_ok = all_ok && ok;
        if (json) {
            nlohmann::json jg;
            jg["group"] = group.name;
            jg["pass"] = ok;
            nlohmann::json checks = nlohmann::json::array();
            for (const auto& r : results)
                checks.push_back({{"name", r.name}, {"pass", r.ok}});
            jg["checks"] = std::move(checks);
            jout.push_back(std::move(jg));
        } else {
            out << (ok ? "PASS" : "FAIL") << "  " << group.name << "\n";
            for (const auto& r : results)
                if (!r.ok) out << "      failed: " << r.name << "\n";
        }
    }
    if (json) out << jout.dump(2) << "\n";
    return all_ok;
}

}  // namespace nrt
