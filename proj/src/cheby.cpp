#include "redchev/cheby.hpp"

#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "redchev/numutil.hpp"
#include "redchev/redei.hpp"

namespace redchev {

namespace {

void check_spec(const ChebySpec& s) {
  if (!s.ext) throw std::domain_error("spec has no extension context");
  if (s.n == 0) throw std::domain_error("spec degree n must be positive");
}

RedeiSpec as_redei(const ChebySpec& s) { return RedeiSpec{s.ext, s.n}; }

}  // namespace

RationalMap cheby_coeffs(const ChebySpec& s) {
  check_spec(s);
  if (s.n > kCoeffDegreeCap) {
    throw std::domain_error("cheby_coeffs: n exceeds the symbolic cap");
  }
  const Extension& E = *s.ext;
  const FieldPtr& F = E.base();
  uint64_t n = s.n;
  auto row = binom_row_mod_p(n, F->characteristic());

  RationalMap out = [&] {
    if (!E.even_char()) {
      // num = sum C(n,2i+1) a^i x^{2i+1}, den = sum C(n,2i) a^i x^{2i}
      std::vector<Elem> num(n + 1, F->zero());
      std::vector<Elem> den(n + 1, F->zero());
      Elem apow = F->one();
      for (uint64_t i = 0; 2 * i <= n; ++i) {
        den[2 * i] = F->from_int(row[2 * i]) * apow;
        if (2 * i + 1 <= n) {
          num[2 * i + 1] = F->from_int(row[2 * i + 1]) * apow;
        }
        apow = apow * E.alpha();
      }
      return RationalMap(Poly(F, std::move(num)), Poly(F, std::move(den)));
    }
    const FieldPtr& X = E.ext();
    std::vector<Elem> num(n + 1, F->zero());
    std::vector<Elem> den(n + 1, F->zero());
    Elem bp = X->one();
    Elem bbp = X->one();
    for (uint64_t i = 0; i <= n; ++i) {
      if (row[i] != 0) {
        Elem cn = bp + bbp;
        Elem cd = E.beta_bar() * bp + E.beta() * bbp;
        auto dn = E.descend(cn);
        auto dd = E.descend(cd);
        if (!dn || !dd) {
          throw std::logic_error("cheby_coeffs: coefficient not in F_q");
        }
        num[i] = *dn;
        den[i] = *dd;
      }
      bp = bp * E.beta();
      bbp = bbp * E.beta_bar();
    }
    return RationalMap(Poly(F, std::move(num)), Poly(F, std::move(den)));
  }();

#ifndef NDEBUG
  if (s.n <= 64) {
    assert(out ==
           redei_coeffs(as_redei(s)).conjugate(MobiusMap::reciprocal(F)));
  }
#endif
  return out;
}

Point cheby_eval(const ChebySpec& s, const Point& pt) {
  check_spec(s);
  const Extension& E = *s.ext;
  bool down = base_side(E, pt);
  Point y = eta_map(E)(lift_point(E, pt));
  Point z = proj_pow(y, s.n);
  Point w = eta_inv_map(E)(z);
  return down ? descend_point(E, w) : w;
}

Point cheby_combine(const Extension& E, const Point& u, const Point& v) {
  bool down = base_side(E, u) && base_side(E, v);
  MobiusMap eta = eta_map(E);
  Point prod = proj_mul(eta(lift_point(E, u)), eta(lift_point(E, v)));
  Point w = eta_inv_map(E)(prod);
  return down ? descend_point(E, w) : w;
}

bool cheby_permutes_p1(const ChebySpec& s) {
  check_spec(s);
  bool criterion = std::gcd(s.n, s.ext->q() + 1) == 1;
#ifndef NDEBUG
  if (s.ext->q() <= 64) assert(criterion == cheby_permutes_p1_brute(s));
#endif
  return criterion;
}

bool cheby_permutes_p1_brute(const ChebySpec& s) {
  check_spec(s);
  const Extension& E = *s.ext;
  std::set<uint64_t> seen;
  for (const Point& pt : projective_line(E.base())) {
    Point img = cheby_eval(s, pt);
    seen.insert(img.is_inf() ? E.q() : img.value().index());
  }
  return seen.size() == E.q() + 1;
}

bool cheby_permutes_affine(const ChebySpec& s) {
  check_spec(s);
  if (s.ext->even_char()) {
    throw std::domain_error(
        "cheby_permutes_affine: criterion stated for odd q only");
  }
  bool criterion = std::gcd(s.n, s.ext->q() + 1) == 1;
#ifndef NDEBUG
  if (s.ext->q() <= 64) assert(criterion == cheby_permutes_affine_brute(s));
#endif
  return criterion;
}

bool cheby_permutes_affine_brute(const ChebySpec& s) {
  check_spec(s);
  const Extension& E = *s.ext;
  std::set<uint64_t> seen;
  for (uint64_t v = 0; v < E.q(); ++v) {
    Point img = cheby_eval(s, Point::finite(E.base()->from_index(v)));
    if (img.is_inf()) return false;  // escapes the affine line
    seen.insert(img.value().index());
  }
  return seen.size() == E.q();
}

bool cheby_is_involution(const ChebySpec& s) {
  check_spec(s);
  uint64_t m = s.ext->q() + 1;
  uint64_t r = s.n % m;
  bool criterion = r * r % m == 1;
#ifndef NDEBUG
  if (s.ext->q() <= 64) assert(criterion == cheby_is_involution_brute(s));
#endif
  return criterion;
}

bool cheby_is_involution_brute(const ChebySpec& s) {
  check_spec(s);
  for (const Point& pt : projective_line(s.ext->base())) {
    if (cheby_eval(s, cheby_eval(s, pt)) != pt) return false;
  }
  return true;
}

}  // namespace redchev
