#include "nrt/macwilliams.hpp"

#include "nrt/errors.hpp"

namespace nrt {

RatMatrix macwilliams_matrix(long long q, int m) {
    if (q < 2) throw DegreeMismatch("q must be at least 2");
    if (m < 1) throw DegreeMismatch("m must be at least 1");
    RatMatrix g(m + 1, m + 1);
    for (int s = 0; s <= m; ++s) {
        for (int t = 0; t <= m; ++t) {
            if (t == 0) {
                g.at(s, t) = 1;
            } else if (t <= m - s) {
                g.at(s, t) = Rational(big_pow(q, t - 1) * (q - 1));
            } else if (t + s == m + 1) {
                g.at(s, t) = Rational(-big_pow(q, t - 1));
            } else {
                g.at(s, t) = 0;
            }
        }
    }
    return g;
}

RatMatrix sigma_matrix(long long q, int m) {
    if (m % 2 != 0) throw OddM("sigma needs m even (q^(m/2) must be an integer)");
    auto g = macwilliams_matrix(q, m);
    return g.scaled(Rational(1, big_pow(q, m / 2)));
}

MultiPoly macwilliams_transform(const MultiPoly& h, long long q, int m,
                                const BigInt& card_c) {
    if (h.nvars() != m + 1)
        throw VariableCountMismatch("enumerator must have m+1 variables");
    if (card_c <= 0) throw DegreeMismatch("code cardinality must be positive");
    auto g = macwilliams_matrix(q, m);
    return substitute_linear(g, h).scaled(Rational(1, card_c));
}

}  // namespace nrt
