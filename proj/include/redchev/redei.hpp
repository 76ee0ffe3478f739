#pragma once

#include "redchev/projmap.hpp"

namespace redchev {

// A degree together with the extension data that pins down R_n(x, alpha).
struct RedeiSpec {
  ExtPtr ext;
  uint64_t n = 1;  // n >= 1
};

// Largest n accepted for symbolic coefficient construction; evaluation by
// conjugation is uncapped.
inline constexpr uint64_t kCoeffDegreeCap = 1'000'000;

// R_n(x, alpha) as an explicit reduced fraction over F_q.  Odd q uses the
// binomial coefficient sums; even q expands the beta-symmetric sums over
// F_{q^2} and verifies every coefficient is rational before descending.
RationalMap redei_coeffs(const RedeiSpec& s);

// R_n(pt) through the conjugation pipeline rho^{-1} o x^n o rho, computed
// in F_{q^2} with O(log n) multiplications.  Points of P^1(F_q) come back
// over F_q; points of P^1(F_{q^2}) stay there.
Point redei_eval(const RedeiSpec& s, const Point& pt);

// rho^{-1}(rho(u) * rho(v)): total on P^1 x P^1 and equal to the rational
// expression (uv + alpha)/(u + v - (beta + beta_bar)) away from its poles.
// Feeding u = R_m(x) and v = R_n(x) yields R_{m+n}(x).
Point redei_combine(const Extension& E, const Point& u, const Point& v);

// gcd(n, q+1) = 1, the permutation criterion for P^1(F_q).
bool redei_permutes(const RedeiSpec& s);
// Brute-force bijectivity scan of P^1(F_q); the independent oracle for the
// criterion above.
bool redei_permutes_brute(const RedeiSpec& s);

}  // namespace redchev
