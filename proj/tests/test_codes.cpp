#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "nrt/codes.hpp"
#include "nrt/errors.hpp"

using namespace nrt;

namespace {

CodeMatrix mat(const FieldPtr& f, int n, int m, const std::vector<uint32_t>& flat) {
    CodeMatrix a(f, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a.idx_at(i, j) = flat[static_cast<size_t>(i) * m + j];
    return a;
}

LinearCode code(const FieldPtr& f, int n, int m,
                const std::vector<std::vector<uint32_t>>& rows) {
    return LinearCode::from_generators(f, n, m, rows);
}

// Exhaustive dual: keep every ambient vector that pairs to zero with every
// codeword. Independent of the kernel-based implementation.
LinearCode dual_bruteforce(const LinearCode& c) {
    const auto& f = c.field_ptr();
    const int nm = c.n() * c.m();
    std::vector<std::vector<uint32_t>> annihilators;
    std::vector<uint32_t> v(nm, 0);
    while (true) {
        CodeMatrix a = mat(f, c.n(), c.m(), v);
        bool ok = true;
        for (uint64_t w = 0; w < c.size() && ok; ++w)
            ok = nrt_inner_product(a, c.codeword(w)).is_zero();
        if (ok) annihilators.push_back(v);
        int i = nm - 1;
        while (i >= 0 && ++v[i] == f->q()) v[i--] = 0;
        if (i < 0) break;
    }
    return LinearCode::from_generators(f, c.n(), c.m(), annihilators);
}

}  // namespace

TEST_CASE("rho of a row vector") {
    auto f2 = Field::make(2, 1);
    auto f7 = Field::make(7, 1);
    auto row = [&](const FieldPtr& f, std::vector<uint32_t> idx) {
        std::vector<FieldElement> v;
        for (auto i : idx) v.push_back(f->element(i));
        return v;
    };
    CHECK(rho_row(row(f2, {1, 0, 1, 0})) == 3);
    CHECK(rho_row(row(f2, {0, 0, 0, 0})) == 0);
    CHECK(rho_row(row(f7, {0, 0, 0, 5})) == 4);
}

TEST_CASE("rho and shape of a matrix") {
    auto f2 = Field::make(2, 1);
    auto a = mat(f2, 2, 2, {1, 0, 0, 1});
    CHECK(rho_matrix(a) == 3);
    auto s = shape_of(a);
    CHECK(s.e == std::vector<int>{1, 1});
    CHECK(s.e0 == 0);

    auto zero = mat(f2, 2, 2, {0, 0, 0, 0});
    CHECK(rho_matrix(zero) == 0);
    CHECK(shape_of(zero).e0 == 2);

    auto b = mat(f2, 1, 2, {1, 1});
    CHECK(shape_of(b).e == std::vector<int>{0, 1});
    CHECK(shape_of(b).e0 == 0);
}

TEST_CASE("property: rho equals the weighted shape sum") {
    std::mt19937 rng(1234);
    for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
        std::uniform_int_distribution<uint32_t> entry(0, f->q() - 1);
        std::uniform_int_distribution<int> dims(1, 4);
        for (int trial = 0; trial < 60; ++trial) {
            int n = dims(rng), m = dims(rng);
            CodeMatrix a(f, n, m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) a.idx_at(i, j) = entry(rng);
            auto s = shape_of(a);
            int weighted = 0;
            for (int j = 0; j < m; ++j) weighted += (j + 1) * s.e[j];
            CHECK(rho_matrix(a) == weighted);
            CHECK(s.e0 + total_degree(Monomial(s.e.begin(), s.e.end())) == n);
        }
    }
}

TEST_CASE("inner product worked values") {
    auto f2 = Field::make(2, 1);
    auto a = mat(f2, 1, 2, {1, 1});
    CHECK(nrt_inner_product(a, a).is_zero());  // 1*1 + 1*1 = 0 in GF(2)

    auto u = mat(f2, 1, 2, {1, 0});
    for (uint32_t b1 : {0u, 1u}) {
        for (uint32_t b2 : {0u, 1u}) {
            auto b = mat(f2, 1, 2, {b1, b2});
            CHECK(nrt_inner_product(u, b) == f2->element(b2));
        }
    }

    auto f3 = Field::make(3, 1);
    auto x = mat(f3, 1, 2, {1, 2});
    auto y = mat(f3, 1, 2, {2, 1});
    CHECK(nrt_inner_product(x, y) == f3->element(2));  // 1*1 + 2*2 = 5 = 2
}

TEST_CASE("property: inner product is symmetric") {
    std::mt19937 rng(5678);
    auto f3 = Field::make(3, 1);
    std::uniform_int_distribution<uint32_t> entry(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        CodeMatrix a(f3, 2, 3), b(f3, 2, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) {
                a.idx_at(i, j) = entry(rng);
                b.idx_at(i, j) = entry(rng);
            }
        CHECK(nrt_inner_product(a, b) == nrt_inner_product(b, a));
    }
}

TEST_CASE("dual codes in M_{1,2}(GF(2))") {
    auto f2 = Field::make(2, 1);
    auto zero = LinearCode::zero_code(f2, 1, 2);
    auto full = dual_code(zero);
    CHECK(full.dim() == 2);

    auto c10 = code(f2, 1, 2, {{1, 0}});
    CHECK(dual_code(c10) == c10);  // <(1,0),(b1,b2)> = b2 forces b2 = 0

    auto c11 = code(f2, 1, 2, {{1, 1}});
    CHECK(dual_code(c11) == c11);  // constraint b1 + b2 = 0
}

TEST_CASE("dual dimension and brute-force oracle, exhaustive small spaces") {
    struct Space {
        int p, n, m;
    };
    for (auto [p, n, m] : {Space{2, 1, 2}, Space{3, 1, 2}, Space{2, 2, 2}, Space{2, 1, 4}}) {
        auto f = Field::make(p, 1);
        for (int r = 0; r <= n * m; ++r) {
            for (const auto& c : enumerate_codes(f, n, m, r)) {
                auto d = dual_code(c);
                CHECK(d.dim() == n * m - r);
                CHECK(d == dual_bruteforce(c));
                CHECK(dual_code(d) == c);
            }
        }
    }
}

TEST_CASE("property: double dual is the identity, exhaustive nm <= 6, q <= 3") {
    std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1},
                                               {1, 4}, {4, 1}, {2, 2}, {1, 5}, {5, 1},
                                               {1, 6}, {6, 1}, {2, 3}, {3, 2}};
    for (int p : {2, 3}) {
        auto f = Field::make(p, 1);
        for (auto [n, m] : shapes)
            for (int r = 0; r <= n * m; ++r)
                for (const auto& c : enumerate_codes(f, n, m, r))
                    CHECK(dual_code(dual_code(c)) == c);
    }
}

TEST_CASE("is_self_dual worked values") {
    auto f2 = Field::make(2, 1);
    CHECK(is_self_dual(code(f2, 1, 2, {{1, 0}})));
    CHECK(!is_self_dual(LinearCode::zero_code(f2, 1, 2)));

    auto f3 = Field::make(3, 1);
    CHECK(is_self_dual(code(f3, 1, 2, {{0, 1}})));
    CHECK(!is_self_dual(code(f3, 1, 2, {{1, 1}})));
}

TEST_CASE("shape enumerator worked values") {
    auto f2 = Field::make(2, 1);
    auto f3 = Field::make(3, 1);

    CHECK(shape_enumerator(code(f2, 1, 2, {{1, 0}})) == MultiPoly::parse("x0 + x1", 3));
    CHECK(shape_enumerator(code(f3, 1, 2, {{0, 1}})) == MultiPoly::parse("x0 + 2*x2", 3));
    CHECK(shape_enumerator(code(f2, 1, 2, {{1, 0}, {0, 1}})) ==
          MultiPoly::parse("x0 + x1 + 2*x2", 3));
    CHECK(shape_enumerator(LinearCode::zero_code(f2, 2, 2)) == MultiPoly::parse("x0^2", 3));
}

TEST_CASE("shape enumerator properties over all small codes") {
    auto f2 = Field::make(2, 1);
    for (int r = 0; r <= 4; ++r) {
        for (const auto& c : enumerate_codes(f2, 2, 2, r)) {
            auto h = shape_enumerator(c);
            CHECK(h.is_homogeneous());
            CHECK(h.degree() == 2);
            // H(1,...,1) = q^r and the zero codeword contributes x0^n
            CHECK(h.evaluate({Rational(1), Rational(1), Rational(1)}) ==
                  Rational(BigInt(1) << r));
            CHECK(h.coeff(Monomial{2, 0, 0}) == 1);
        }
    }
}

TEST_CASE("shape enumerator budget and threads") {
    auto f2 = Field::make(2, 1);
    auto full = code(f2, 2, 2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK_THROWS_AS(shape_enumerator(full, 8), BudgetExceeded);

    auto h1 = shape_enumerator(full, kDefaultBudget, 1);
    auto h4 = shape_enumerator(full, kDefaultBudget, 4);
    CHECK(h1 == h4);
    CHECK(h1.evaluate({Rational(1), Rational(1), Rational(1)}) == Rational(16));
}

TEST_CASE("codeword decoding is canonical") {
    auto f3 = Field::make(3, 1);
    auto c = code(f3, 1, 2, {{1, 0}, {0, 1}});
    // messages are big-endian in canonical element order
    CHECK(c.codeword(0) == mat(f3, 1, 2, {0, 0}));
    CHECK(c.codeword(1) == mat(f3, 1, 2, {0, 1}));
    CHECK(c.codeword(3) == mat(f3, 1, 2, {1, 0}));
    CHECK(c.codeword(5) == mat(f3, 1, 2, {1, 2}));
}

TEST_CASE("enumerate_codes counts match Gaussian binomials") {
    auto f2 = Field::make(2, 1);
    CHECK(enumerate_codes(f2, 2, 2, 0).size() == 1);
    CHECK(enumerate_codes(f2, 2, 2, 1).size() == 15);
    CHECK(enumerate_codes(f2, 2, 2, 2).size() == 35);
    CHECK(enumerate_codes(f2, 2, 2, 3).size() == 15);
    CHECK(enumerate_codes(f2, 2, 2, 4).size() == 1);

    auto f3 = Field::make(3, 1);
    CHECK(enumerate_codes(f3, 1, 2, 1).size() == 4);

    // distinct codes, deterministic order
    auto again = enumerate_codes(f2, 2, 2, 2);
    std::set<std::vector<uint32_t>> keys;
    for (const auto& c : again) keys.insert(c.generators().a);
    CHECK(keys.size() == again.size());
}

TEST_CASE("self-dual enumeration worked values") {
    auto f2 = Field::make(2, 1);
    auto found = enumerate_self_dual_codes(f2, 1, 2);
    REQUIRE(found.size() == 3);
    std::set<std::vector<uint32_t>> gens;
    for (const auto& c : found) {
        CHECK(c.dim() == 1);
        CHECK(is_self_dual(c));
        gens.insert(c.generators().a);
    }
    CHECK(gens == std::set<std::vector<uint32_t>>{{1, 0}, {0, 1}, {1, 1}});

    auto f3 = Field::make(3, 1);
    auto found3 = enumerate_self_dual_codes(f3, 1, 2);
    REQUIRE(found3.size() == 2);
    std::set<std::vector<uint32_t>> gens3;
    for (const auto& c : found3) gens3.insert(c.generators().a);
    CHECK(gens3 == std::set<std::vector<uint32_t>>{{1, 0}, {0, 1}});

    CHECK_THROWS_AS(enumerate_self_dual_codes(f2, 1, 1), OddAmbient);
    CHECK_THROWS_AS(enumerate_self_dual_codes(f2, 2, 2, 8), BudgetExceeded);
}

TEST_CASE("self-dual enumeration: oracle by filtering all codes") {
    struct Space {
        int p, n, m;
    };
    for (auto [p, n, m] : {Space{2, 1, 2}, Space{3, 1, 2}, Space{2, 2, 2}, Space{2, 1, 4}}) {
        auto f = Field::make(p, 1);
        auto scan = enumerate_self_dual_codes(f, n, m);
        std::vector<LinearCode> oracle;
        for (const auto& c : enumerate_codes(f, n, m, n * m / 2))
            if (is_self_dual(c)) oracle.push_back(c);
        REQUIRE(scan.size() == oracle.size());
        for (size_t i = 0; i < scan.size(); ++i) CHECK(scan[i] == oracle[i]);

        // threaded scan returns the same list in the same order
        auto threaded = enumerate_self_dual_codes(f, n, m, kDefaultBudget, 4);
        REQUIRE(threaded.size() == scan.size());
        for (size_t i = 0; i < scan.size(); ++i) CHECK(threaded[i] == scan[i]);
    }
}

TEST_CASE("generator rows outside the field are rejected") {
    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(code(f2, 1, 2, {{2, 0}}), DegreeMismatch);
    CHECK_THROWS_AS(code(f2, 1, 2, {{1, 0, 0}}), DimensionMismatch);
}

TEST_CASE("self-dual scan over an extension field") {
    // in characteristic 2 every vector of M_{1,2} is self-orthogonal, so all
    // (q^2-1)/(q-1) = q+1 lines are self-dual
    auto f4 = Field::make(2, 2);
    auto found = enumerate_self_dual_codes(f4, 1, 2);
    CHECK(found.size() == 5);
    std::vector<LinearCode> oracle;
    for (const auto& c : enumerate_codes(f4, 1, 2, 1))
        if (is_self_dual(c)) oracle.push_back(c);
    REQUIRE(found.size() == oracle.size());
    for (size_t i = 0; i < found.size(); ++i) CHECK(found[i] == oracle[i]);
}
