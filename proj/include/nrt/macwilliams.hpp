#pragma once

#include "nrt/linalg.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/rational.hpp"

namespace nrt {

// The (m+1) x (m+1) integer MacWilliams matrix for the NRT metric:
//   g[s][t] = 1            if t = 0
//           = q^(t-1)(q-1)  if 0 < t <= m - s
//           = -q^(t-1)      if t + s = m + 1
//           = 0             if t + s > m + 1
// Satisfies g^2 = q^m * I for every m >= 1.
RatMatrix macwilliams_matrix(long long q, int m);

// The involution q^(-m/2) * g; requires m even, has trace 1.
RatMatrix sigma_matrix(long long q, int m);  // OddM if m is odd

// H_dual(x) = (1/|C|) * H(g x). With H the shape enumerator of a code of
// size cardC this returns the dual code's shape enumerator.
MultiPoly macwilliams_transform(const MultiPoly& h, long long q, int m, const BigInt& card_c);

}  // namespace nrt
