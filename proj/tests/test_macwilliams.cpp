#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrt/codes.hpp"
#include "nrt/errors.hpp"
#include "nrt/macwilliams.hpp"

using namespace nrt;

namespace {

RatMatrix rat_mat(const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return RatMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("MacWilliams matrix worked values") {
    CHECK(macwilliams_matrix(2, 2) == rat_mat({{1, 1, 2}, {1, 1, -2}, {1, -1, 0}}));
    CHECK(macwilliams_matrix(3, 2) == rat_mat({{1, 2, 6}, {1, 2, -3}, {1, -1, 0}}));
    CHECK(macwilliams_matrix(2, 4) == rat_mat({{1, 1, 2, 4, 8},
                                               {1, 1, 2, 4, -8},
                                               {1, 1, 2, -4, 0},
                                               {1, 1, -2, 0, 0},
                                               {1, -1, 0, 0, 0}}));
}

TEST_CASE("the four matrix cases partition all entries") {
    for (int m : {1, 2, 3, 4, 5, 6, 7, 8}) {
        for (int s = 0; s <= m; ++s) {
            for (int t = 0; t <= m; ++t) {
                int hits = 0;
                if (t == 0) ++hits;
                if (t > 0 && t <= m - s) ++hits;
                if (t > 0 && t + s == m + 1) ++hits;
                if (t > 0 && t + s > m + 1 && t + s != m + 1) ++hits;
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("g^2 = q^m I on the full grid") {
    // the matrix identity needs no parity assumption, only sigma does
    for (long long q : {2, 3, 4, 5}) {
        for (int m : {1, 2, 3, 4, 5, 6, 7, 8}) {
            auto g = macwilliams_matrix(q, m);
            auto q_to_m = Rational(big_pow(q, m));
            CHECK(g * g == RatMatrix::identity(m + 1).scaled(q_to_m));
        }
    }
}

TEST_CASE("sigma worked values and trace") {
    auto sigma = sigma_matrix(2, 2);
    CHECK(sigma == macwilliams_matrix(2, 2).scaled(Rational(1, 2)));
    CHECK(sigma.at(0, 0) == Rational(1, 2));
    CHECK(sigma.at(0, 2) == Rational(1));

    for (long long q : {2, 3, 4, 5}) {
        for (int m : {2, 4, 6, 8}) {
            auto s = sigma_matrix(q, m);
            CHECK(s.trace() == Rational(1));
            CHECK((s * s).is_identity());
        }
    }

    CHECK((sigma_matrix(3, 4) * sigma_matrix(3, 4)).is_identity());
    CHECK_THROWS_AS(sigma_matrix(2, 3), OddM);
}

TEST_CASE("transform worked values") {
    // zero code in M_{1,2}(GF(2)) maps to the full space
    auto h0 = MultiPoly::parse("x0", 3);
    CHECK(macwilliams_transform(h0, 2, 2, 1) == MultiPoly::parse("x0 + x1 + 2*x2", 3));

    // self-dual codes are fixed points
    auto h1 = MultiPoly::parse("x0 + x1", 3);
    CHECK(macwilliams_transform(h1, 2, 2, 2) == h1);

    auto h2 = MultiPoly::parse("x0 + 2*x2", 3);
    CHECK(macwilliams_transform(h2, 3, 2, 3) == h2);
}

TEST_CASE("transform errors") {
    CHECK_THROWS_AS(macwilliams_transform(MultiPoly::parse("x0", 2), 2, 2, 1),
                    VariableCountMismatch);
    CHECK_THROWS_AS(macwilliams_transform(MultiPoly::parse("x0", 3), 2, 2, 0), DegreeMismatch);
}

TEST_CASE("oracle: transform equals the brute-force dual enumerator") {
    struct Space {
        int p, n, m;
    };
    for (auto [p, n, m] : {Space{2, 1, 2}, Space{3, 1, 2}, Space{2, 2, 2}, Space{2, 1, 4}}) {
        auto f = Field::make(p, 1);
        for (int r = 0; r <= n * m; ++r) {
            for (const auto& c : enumerate_codes(f, n, m, r)) {
                auto lhs = macwilliams_transform(shape_enumerator(c), p, m, BigInt(c.size()));
                auto rhs = shape_enumerator(dual_code(c));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("applying the transform twice returns the original enumerator") {
    auto f2 = Field::make(2, 1);
    for (int r = 0; r <= 4; ++r) {
        for (const auto& c : enumerate_codes(f2, 2, 2, r)) {
            auto h = shape_enumerator(c);
            auto once = macwilliams_transform(h, 2, 2, BigInt(c.size()));
            auto twice = macwilliams_transform(once, 2, 2, BigInt(16) / c.size());
            CHECK(twice == h);
        }
    }
}

TEST_CASE("oracle and fixed points over GF(4)") {
    auto f4 = Field::make(2, 2);
    for (int r = 0; r <= 2; ++r) {
        for (const auto& c : enumerate_codes(f4, 1, 2, r)) {
            auto lhs = macwilliams_transform(shape_enumerator(c), 4, 2, BigInt(c.size()));
            CHECK(lhs == shape_enumerator(dual_code(c)));
        }
    }
    auto sigma = sigma_matrix(4, 2);
    for (const auto& c : enumerate_self_dual_codes(f4, 1, 2)) {
        auto h = shape_enumerator(c);
        CHECK(substitute_linear(sigma, h) == h);
    }
}
