#include "redchev/redei.hpp"

#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "redchev/numutil.hpp"

namespace redchev {

namespace {

void check_spec(const RedeiSpec& s) {
  if (!s.ext) throw std::domain_error("spec has no extension context");
  if (s.n == 0) throw std::domain_error("spec degree n must be positive");
}

}  // namespace

RationalMap redei_coeffs(const RedeiSpec& s) {
  check_spec(s);
  if (s.n > kCoeffDegreeCap) {
    throw std::domain_error("redei_coeffs: n exceeds the symbolic cap");
  }
  const Extension& E = *s.ext;
  const FieldPtr& F = E.base();
  uint64_t n = s.n;
  auto row = binom_row_mod_p(n, F->characteristic());

  if (!E.even_char()) {
    // num = sum C(n,2i) a^i x^{n-2i}, den = sum C(n,2i+1) a^i x^{n-2i-1}
    std::vector<Elem> num(n + 1, F->zero());
    std::vector<Elem> den(n, F->zero());
    Elem apow = F->one();
    for (uint64_t i = 0; 2 * i <= n; ++i) {
      num[n - 2 * i] = F->from_int(row[2 * i]) * apow;
      if (2 * i + 1 <= n) {
        den[n - 2 * i - 1] = F->from_int(row[2 * i + 1]) * apow;
      }
      apow = apow * E.alpha();
    }
    return RationalMap(Poly(F, std::move(num)), Poly(F, std::move(den)));
  }

  // even q: expand over F_{q^2} and descend
  const FieldPtr& X = E.ext();
  std::vector<Elem> num(n + 1, F->zero());
  std::vector<Elem> den(n + 1, F->zero());
  Elem bp = X->one();   // beta^i
  Elem bbp = X->one();  // beta_bar^i
  for (uint64_t i = 0; i <= n; ++i) {
    if (row[i] != 0) {
      Elem cn = E.beta_bar() * bp + E.beta() * bbp;
      Elem cd = bp + bbp;
      auto dn = E.descend(cn);
      auto dd = E.descend(cd);
      if (!dn || !dd) {
        throw std::logic_error("redei_coeffs: coefficient not in F_q");
      }
      num[n - i] = *dn;
      den[n - i] = *dd;
    }
    bp = bp * E.beta();
    bbp = bbp * E.beta_bar();
  }
  return RationalMap(Poly(F, std::move(num)), Poly(F, std::move(den)));
}

Point redei_eval(const RedeiSpec& s, const Point& pt) {
  check_spec(s);
  const Extension& E = *s.ext;
  bool down = base_side(E, pt);
  Point y = rho_map(E)(lift_point(E, pt));
  Point z = proj_pow(y, s.n);
  Point w = rho_inv_map(E)(z);
  return down ? descend_point(E, w) : w;
}

Point redei_combine(const Extension& E, const Point& u, const Point& v) {
  bool down = base_side(E, u) && base_side(E, v);
  MobiusMap rho = rho_map(E);
  Point prod = proj_mul(rho(lift_point(E, u)), rho(lift_point(E, v)));
  Point w = rho_inv_map(E)(prod);
  return down ? descend_point(E, w) : w;
}

bool redei_permutes(const RedeiSpec& s) {
  check_spec(s);
  bool criterion = std::gcd(s.n, s.ext->q() + 1) == 1;
#ifndef NDEBUG
  if (s.ext->q() <= 64) assert(criterion == redei_permutes_brute(s));
#endif
  return criterion;
}

bool redei_permutes_brute(const RedeiSpec& s) {
  check_spec(s);
  const Extension& E = *s.ext;
  std::set<uint64_t> seen;
  for (const Point& pt : projective_line(E.base())) {
    Point img = redei_eval(s, pt);
    seen.insert(img.is_inf() ? E.q() : img.value().index());
  }
  return seen.size() == E.q() + 1;
}

}  // namespace redchev
