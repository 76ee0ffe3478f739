#pragma once

#include "redchev/projmap.hpp"

namespace redchev {

// Degree and extension data pinning down the tangent-Chebyshev map
// C_n(x, alpha).  Validity of alpha is enforced when the Extension is
// built, so every ChebySpec carries a legal parameter.
struct ChebySpec {
  ExtPtr ext;
  uint64_t n = 1;  // n >= 1
};

// C_n(x, alpha) as an explicit reduced fraction over F_q; equals the
// conjugate of R_n(x, alpha) by x -> 1/x (asserted in debug builds).
RationalMap cheby_coeffs(const ChebySpec& s);

// C_n(pt) through eta^{-1} o x^n o eta, computed in F_{q^2}.
Point cheby_eval(const ChebySpec& s, const Point& pt);

// eta^{-1}(eta(u) * eta(v)): total on P^1 x P^1 and equal to
// H(u, v) = (u + v - (beta+beta_bar) uv)/(1 + alpha uv) away from poles.
// Feeding u = C_m(x) and v = C_n(x) yields C_{m+n}(x).
Point cheby_combine(const Extension& E, const Point& u, const Point& v);

// gcd(n, q+1) = 1, the permutation criterion for P^1(F_q).
bool cheby_permutes_p1(const ChebySpec& s);
bool cheby_permutes_p1_brute(const ChebySpec& s);

// Permutation criterion for the affine line F_q; stated for odd q only
// (throws on even q).
bool cheby_permutes_affine(const ChebySpec& s);
// Bijectivity scan of x -> C_n(x) restricted to F_q.  Works for every q,
// exposing the even-q behaviour as data without asserting a criterion.
bool cheby_permutes_affine_brute(const ChebySpec& s);

// n^2 = 1 (mod q+1): C_n induces an involution on P^1(F_q).
bool cheby_is_involution(const ChebySpec& s);
// Double-composition identity scan over P^1(F_q).
bool cheby_is_involution_brute(const ChebySpec& s);

}  // namespace redchev
