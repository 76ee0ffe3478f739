#pragma once

#include <array>
#include <optional>

#include "redchev/projmap.hpp"

namespace redchev {

// Trigonometry over even-order fields: fix zeta in F_{q^2}^* and define
//   sin(k) = zeta^k + zeta^-k
//   cos(k) = beta zeta^k + beta_bar zeta^-k
//   tan(k) = sin(k)/cos(k)         (a point of P^1, infinity at cos = 0).
struct TrigCtx2 {
  ExtPtr ext;
  Elem zeta;      // over ext(), nonzero
  uint64_t ord;   // multiplicative order of zeta
};

// zeta defaults to the smallest generator of F_{q^2}^*.
TrigCtx2 make_trig2(ExtPtr ext, std::optional<Elem> zeta = std::nullopt);

Elem sin2(const TrigCtx2& c, int64_t k);
Elem cos2(const TrigCtx2& c, int64_t k);
Point tan2(const TrigCtx2& c, int64_t k);

// The five identities, checked exactly in F_{q^2}:
//   [0] zeta^k = cos(k) + beta_bar sin(k)
//   [1] 1 = cos(k)^2 + sin(k)cos(k) + alpha sin(k)^2
//   [2] sin(k+l) = sin(k)cos(l) + sin(l)cos(k) + sin(k)sin(l)
//   [3] cos(k+l) = cos(k)cos(l) + alpha sin(k)sin(l)
//   [4] tan(k+l) = (tan k + tan l + tan k tan l)/(1 + alpha tan k tan l),
//       evaluated projectively through the eta-combiner when a tangent
//       is infinite.
std::array<bool, 5> trig2_identities(const TrigCtx2& c, int64_t k, int64_t l);

// (C_n(tan(k), alpha), tan(n*k)); the two components agree.
std::pair<Point, Point> tan2_multiply(const TrigCtx2& c, int64_t k,
                                      uint64_t n);

// Odd-q counterpart with cos(k) = (zeta^k + zeta^-k)/2 and
// sin(k) = (zeta^k - zeta^-k)/(2 i), where i = beta satisfies i^2 = alpha.
struct TrigCtxOdd {
  ExtPtr ext;
  Elem zeta;
  Elem i_elem;   // beta, so i_elem^2 = alpha
  uint64_t ord;
};

TrigCtxOdd make_trig_odd(ExtPtr ext, std::optional<Elem> zeta = std::nullopt);

Elem sin_odd(const TrigCtxOdd& c, int64_t k);
Elem cos_odd(const TrigCtxOdd& c, int64_t k);
Point tan_odd(const TrigCtxOdd& c, int64_t k);

// tan(k+l) = (tan k + tan l)/(1 + i^2 tan k tan l), projectively.
bool tan_odd_addition(const TrigCtxOdd& c, int64_t k, int64_t l);

}  // namespace redchev
