#include "nrt/rational.hpp"

#include <cctype>

#include "nrt/errors.hpp"

namespace nrt {

std::string rat_str(const Rational& r) {
    return r.str();
}

Rational rat_parse(std::string_view s) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) -> BigInt {
        bool neg = false;
        if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected digits in rational literal: '" + std::string(s) + "'");
        BigInt v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? BigInt(-v) : v;
    };

    skip_ws();
    BigInt num = read_int(true);
    BigInt den = 1;
    skip_ws();
    if (i < s.size() && s[i] == '/') {
        ++i;
        skip_ws();
        den = read_int(false);
    }
    skip_ws();
    if (i != s.size())
        throw ParseError("trailing characters in rational literal: '" + std::string(s) + "'");
    if (den == 0) throw DivisionByZero("rational literal with zero denominator");
    return Rational(num, den);
}

BigInt big_pow(BigInt base, unsigned exp) {
    BigInt result = 1;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

}  // namespace nrt
