#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nrt/errors.hpp"
#include "nrt/multipoly.hpp"

using namespace nrt;

namespace {

MultiPoly P(const char* s, int nvars = 3) { return MultiPoly::parse(s, nvars); }

MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg, int terms) {
    std::uniform_int_distribution<int> expd(0, maxdeg), coeff(-5, 5), den(1, 4);
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        for (int i = 0; i < nvars; ++i) m[i] = expd(rng);
        p.add_term(m, Rational(coeff(rng), den(rng)));
    }
    return p;
}

RatMatrix random_matrix(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("ring arithmetic worked values") {
    CHECK(P("x0 + x1") * P("x0 - x1") == P("x0^2 - x1^2"));
    CHECK(P("x0 + x2") + P("x0 + x1") == P("2*x0 + x1 + x2"));
    CHECK(P("x0").scaled(0).is_zero());
    CHECK(P("x0") - P("x0") == MultiPoly(3));
}

TEST_CASE("monomial basis worked values") {
    auto deg1 = monomial_basis(2, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0] == Monomial{1, 0});
    CHECK(deg1[1] == Monomial{0, 1});

    auto deg2 = monomial_basis(3, 2);
    REQUIRE(deg2.size() == 6);
    CHECK(deg2[0] == Monomial{2, 0, 0});
    CHECK(deg2[1] == Monomial{1, 1, 0});
    CHECK(deg2[2] == Monomial{1, 0, 1});
    CHECK(deg2[3] == Monomial{0, 2, 0});
    CHECK(deg2[4] == Monomial{0, 1, 1});
    CHECK(deg2[5] == Monomial{0, 0, 2});

    auto deg0 = monomial_basis(3, 0);
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0] == Monomial{0, 0, 0});
}

TEST_CASE("substitution worked values") {
    auto p = P("x0^2 + 2*x1");
    CHECK(substitute_linear(RatMatrix::identity(3), p) == p);

    // the q=2, m=2 involution fixes x0 + x2
    auto sigma = RatMatrix::from_rows({
        {Rational(1, 2), Rational(1, 2), Rational(1)},
        {Rational(1, 2), Rational(1, 2), Rational(-1)},
        {Rational(1, 2), Rational(-1, 2), Rational(0)},
    });
    CHECK(substitute_linear(sigma, P("x0 + x2")) == P("x0 + x2"));

    // row convention: x0 goes to row 0 of the matrix
    auto t = RatMatrix::from_rows({
        {Rational(3, 2), Rational(1, 2), Rational(1)},
        {Rational(1), Rational(-1), Rational(2)},
        {Rational(1), Rational(-1), Rational(-2)},
    });
    CHECK(substitute_linear(t, P("x0")) == P("3/2*x0 + 1/2*x1 + x2"));
}

TEST_CASE("printer: canonical form") {
    CHECK(MultiPoly(3).str() == "0");
    CHECK(P("x0 + x1").str() == "x0 + x1");
    CHECK(P("-x0 - 3/2*x2").str() == "-x0 - 3/2*x2");
    CHECK(P("2*x2 + x1 + 1").str() == "x1 + 2*x2 + 1");  // grlex order, constants last
    CHECK(P("x1*x0").str() == "x0*x1");
    CHECK(P("x0*x0").str() == "x0^2");
    CHECK(P("0").is_zero());
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x3"), ParseError);  // out of range for nvars=3
    CHECK_THROWS_AS(P("x0 +"), ParseError);
    CHECK_THROWS_AS(P("x0 x1"), ParseError);
    CHECK_THROWS_AS(P("y0"), ParseError);
    CHECK_THROWS_AS(P("1/0*x0"), DivisionByZero);
    CHECK_THROWS_AS(P("x0^"), ParseError);
}

TEST_CASE("variable name prefix and base") {
    auto g = MultiPoly::parse("1/2*g1 + 1/4*g2", 3, "g", 1);
    CHECK(g == P("1/2*x0 + 1/4*x1"));
    std::vector<std::string> names = {"g1", "g2", "g3"};
    CHECK(g.str(&names) == "1/2*g1 + 1/4*g2");
}

TEST_CASE("property: print/parse round trip") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        auto p = random_poly(rng, 4, 3, 6);
        CHECK(MultiPoly::parse(p.str(), 4) == p);
    }
}

TEST_CASE("property: substitution composes contravariantly") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(rng, 3);
        auto b = random_matrix(rng, 3);
        auto p = random_poly(rng, 3, 2, 4);
        CHECK(substitute_linear(a, substitute_linear(b, p)) == substitute_linear(b * a, p));
    }
}

TEST_CASE("property: substitution is a ring homomorphism") {
    std::mt19937 rng(888);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 3);
        auto p = random_poly(rng, 3, 2, 4);
        auto r = random_poly(rng, 3, 2, 4);
        CHECK(substitute_linear(m, p * r) ==
              substitute_linear(m, p) * substitute_linear(m, r));
        CHECK(substitute_linear(m, p + r) ==
              substitute_linear(m, p) + substitute_linear(m, r));
    }
}

TEST_CASE("property: homogeneity is preserved by substitution") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(rng, 3);
        MultiPoly p(3);
        std::uniform_int_distribution<int> coeff(-4, 4);
        for (const auto& mono : monomial_basis(3, 3)) p.add_term(mono, coeff(rng));
        auto image = substitute_linear(m, p);
        CHECK(image.is_homogeneous());
        if (!image.is_zero()) CHECK(image.degree() == 3);
    }
}

TEST_CASE("derivative and evaluation") {
    CHECK(P("x0^2*x1").derivative(0) == P("2*x0*x1"));
    CHECK(P("x0^2*x1").derivative(1) == P("x0^2"));
    CHECK(P("x0^2*x1").derivative(2).is_zero());
    CHECK(P("x0 + 2*x1 + x2^2").evaluate({Rational(1), Rational(2), Rational(3)}) ==
          Rational(14));
}

TEST_CASE("degree and homogeneity") {
    CHECK(MultiPoly(2).degree() == -1);
    CHECK(P("x0 + x1^3").degree() == 3);
    CHECK(P("x0 + x1^3").is_homogeneous() == false);
    CHECK(P("x0*x1 + x2^2").is_homogeneous());
    CHECK(P("x0 + x0^2").homogeneous_part(1) == P("x0"));
}

TEST_CASE("variable count mismatches") {
    CHECK_THROWS_AS(P("x0") + MultiPoly::parse("x0", 2), VariableCountMismatch);
    CHECK_THROWS_AS(substitute_linear(RatMatrix::identity(2), P("x0")), DimensionMismatch);
    CHECK_THROWS_AS(substitute_linear(RatMatrix(2, 3), MultiPoly::parse("x0", 2)),
                    DimensionMismatch);
}
