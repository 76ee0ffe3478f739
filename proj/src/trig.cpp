#include "redchev/trig.hpp"

#include <stdexcept>

#include "redchev/cheby.hpp"

namespace redchev {

namespace {

// zeta^k with any integer k, reduced in <zeta>
Elem zpow(const Elem& zeta, uint64_t ord, int64_t k) {
  int64_t m = static_cast<int64_t>(ord);
  int64_t e = ((k % m) + m) % m;
  return zeta.pow(e);
}

Elem checked_zeta(const ExtPtr& ext, std::optional<Elem> zeta) {
  if (!zeta) return ext->field_generator();
  if (!zeta->valid() || !zeta->field().same(*ext->ext())) {
    throw std::domain_error("zeta must lie in F_{q^2}");
  }
  if (zeta->is_zero()) throw std::domain_error("zeta must be nonzero");
  return *zeta;
}

}  // namespace

TrigCtx2 make_trig2(ExtPtr ext, std::optional<Elem> zeta) {
  if (!ext) throw std::domain_error("make_trig2: no extension context");
  if (!ext->even_char()) {
    throw std::domain_error("make_trig2: q must be even");
  }
  Elem z = checked_zeta(ext, std::move(zeta));
  uint64_t ord = element_order(z);
  return TrigCtx2{std::move(ext), z, ord};
}

Elem sin2(const TrigCtx2& c, int64_t k) {
  return zpow(c.zeta, c.ord, k) + zpow(c.zeta, c.ord, -k);
}

Elem cos2(const TrigCtx2& c, int64_t k) {
  return c.ext->beta() * zpow(c.zeta, c.ord, k) +
         c.ext->beta_bar() * zpow(c.zeta, c.ord, -k);
}

Point tan2(const TrigCtx2& c, int64_t k) {
  Elem cs = cos2(c, k);
  if (cs.is_zero()) return Point::infinity();
  return Point::finite(sin2(c, k) / cs);
}

std::array<bool, 5> trig2_identities(const TrigCtx2& c, int64_t k, int64_t l) {
  const Extension& E = *c.ext;
  Elem alpha = E.embed(E.alpha());
  Elem one = E.ext()->one();
  Elem sk = sin2(c, k), sl = sin2(c, l), ck = cos2(c, k), cl = cos2(c, l);
  std::array<bool, 5> ok{};
  ok[0] = zpow(c.zeta, c.ord, k) == ck + E.beta_bar() * sk;
  ok[1] = one == ck * ck + sk * ck + alpha * sk * sk;
  ok[2] = sin2(c, k + l) == sk * cl + sl * ck + sk * sl;
  ok[3] = cos2(c, k + l) == ck * cl + alpha * sk * sl;
  // The right-hand side of the tangent addition law is the eta-combiner
  // H(tan k, tan l), total on P^1 x P^1.  Tangents live in P^1(F_{q^2});
  // lift both sides there before comparing (the combiner descends when
  // every input is infinity).
  ok[4] = lift_point(E, tan2(c, k + l)) ==
          lift_point(E, cheby_combine(E, tan2(c, k), tan2(c, l)));
  return ok;
}

std::pair<Point, Point> tan2_multiply(const TrigCtx2& c, int64_t k,
                                      uint64_t n) {
  ChebySpec spec{c.ext, n};
  Point lhs = cheby_eval(spec, tan2(c, k));
  int64_t m = static_cast<int64_t>(c.ord);
  int64_t nk = static_cast<int64_t>((static_cast<__int128>(n % c.ord) *
                                     (((k % m) + m) % m)) %
                                    m);
  Point rhs = tan2(c, nk);
  // both components over F_{q^2}; cheby_eval descends on an infinite input
  return {lift_point(*c.ext, lhs), lift_point(*c.ext, rhs)};
}

TrigCtxOdd make_trig_odd(ExtPtr ext, std::optional<Elem> zeta) {
  if (!ext) throw std::domain_error("make_trig_odd: no extension context");
  if (ext->even_char()) {
    throw std::domain_error("make_trig_odd: q must be odd");
  }
  Elem z = checked_zeta(ext, std::move(zeta));
  uint64_t ord = element_order(z);
  Elem i = ext->beta();
  return TrigCtxOdd{std::move(ext), z, i, ord};
}

Elem sin_odd(const TrigCtxOdd& c, int64_t k) {
  Elem two = c.ext->ext()->from_int(2);
  return (zpow(c.zeta, c.ord, k) - zpow(c.zeta, c.ord, -k)) / (two * c.i_elem);
}

Elem cos_odd(const TrigCtxOdd& c, int64_t k) {
  Elem two = c.ext->ext()->from_int(2);
  return (zpow(c.zeta, c.ord, k) + zpow(c.zeta, c.ord, -k)) / two;
}

Point tan_odd(const TrigCtxOdd& c, int64_t k) {
  Elem cs = cos_odd(c, k);
  if (cs.is_zero()) return Point::infinity();
  return Point::finite(sin_odd(c, k) / cs);
}

bool tan_odd_addition(const TrigCtxOdd& c, int64_t k, int64_t l) {
  // For odd q the eta-combiner reduces to (x + y)/(1 + alpha x y), the
  // right-hand side of the identity with i^2 = alpha.
  return lift_point(*c.ext, tan_odd(c, k + l)) ==
         lift_point(*c.ext,
                    cheby_combine(*c.ext, tan_odd(c, k), tan_odd(c, l)));
}

}  // namespace redchev
