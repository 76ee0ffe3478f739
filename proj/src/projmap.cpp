#include "redchev/projmap.hpp"

#include <stdexcept>

namespace redchev {

const Elem& Point::value() const {
  if (inf_) throw std::logic_error("value() of the point at infinity");
  return v_;
}

std::vector<Point> projective_line(const FieldPtr& f) {
  std::vector<Point> out;
  out.reserve(f->order() + 1);
  for (uint64_t v = 0; v < f->order(); ++v) {
    out.push_back(Point::finite(f->from_index(v)));
  }
  out.push_back(Point::infinity());
  return out;
}

Point proj_mul(const Point& a, const Point& b) {
  if (a.is_inf() || b.is_inf()) {
    const Point& fin = a.is_inf() ? b : a;
    if (!fin.is_inf() && fin.value().is_zero()) {
      throw std::domain_error("proj_mul: inf * 0 is undefined");
    }
    return Point::infinity();
  }
  return Point::finite(a.value() * b.value());
}

Point proj_pow(const Point& a, uint64_t n) {
  if (n == 0) throw std::domain_error("proj_pow: exponent must be positive");
  if (a.is_inf()) return a;
  const Elem& v = a.value();
  if (v.is_zero()) return a;
  // reduce in the unit group before squaring-and-multiplying
  uint64_t m = v.field().order() - 1;
  return Point::finite(v.pow(static_cast<int64_t>(n % m)));
}

// --- MobiusMap

MobiusMap::MobiusMap(const Elem& a, const Elem& b, const Elem& c,
                     const Elem& d) {
  f_ = a.field().shared_from_this();
  Elem det = a * d - b * c;
  if (det.is_zero()) {
    throw std::domain_error("MobiusMap: ad - bc = 0");
  }
  a_ = a;
  b_ = b;
  c_ = c;
  d_ = d;
  for (Elem* e : {&a_, &b_, &c_, &d_}) {
    if (!e->is_zero()) {
      Elem s = e->inv();
      a_ = a_ * s;
      b_ = b_ * s;
      c_ = c_ * s;
      d_ = d_ * s;
      break;
    }
  }
}

MobiusMap MobiusMap::identity(const FieldPtr& f) {
  return MobiusMap(f->one(), f->zero(), f->zero(), f->one());
}

MobiusMap MobiusMap::reciprocal(const FieldPtr& f) {
  return MobiusMap(f->zero(), f->one(), f->one(), f->zero());
}

namespace {

// Embed a finite point into the map's field when it lives in the base of a
// quadratic extension; otherwise require an exact field match.
Elem lift_value(const FieldPtr& f, const Elem& v) {
  if (v.field().same(*f)) return f->from_index(v.index());
  if (f->is_quadratic_ext() && v.field().same(*f->base())) {
    return f->from_index(v.index());  // indices below q are the embedding
  }
  throw std::domain_error("point over " + v.field().describe() +
                          " applied to a map over " + f->describe());
}

}  // namespace

Point MobiusMap::apply(const Point& p) const {
  if (p.is_inf()) {
    if (c_.is_zero()) return Point::infinity();
    return Point::finite(a_ / c_);
  }
  Elem x = lift_value(f_, p.value());
  Elem den = c_ * x + d_;
  if (den.is_zero()) return Point::infinity();
  return Point::finite((a_ * x + b_) / den);
}

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  if (!f_->same(*inner.f_)) {
    throw std::domain_error("compose: maps over different fields");
  }
  return MobiusMap(a_ * inner.a_ + b_ * inner.c_,
                   a_ * inner.b_ + b_ * inner.d_,
                   c_ * inner.a_ + d_ * inner.c_,
                   c_ * inner.b_ + d_ * inner.d_);
}

MobiusMap MobiusMap::inverse() const {
  return MobiusMap(d_, -b_, -c_, a_);
}

bool operator==(const MobiusMap& x, const MobiusMap& y) {
  return x.f_->same(*y.f_) && x.a_.index() == y.a_.index() &&
         x.b_.index() == y.b_.index() && x.c_.index() == y.c_.index() &&
         x.d_.index() == y.d_.index();
}

MobiusMap rho_map(const Extension& E) {
  const FieldPtr& X = E.ext();
  return MobiusMap(X->one(), -E.beta_bar(), X->one(), -E.beta());
}

MobiusMap rho_inv_map(const Extension& E) {
  const FieldPtr& X = E.ext();
  return MobiusMap(E.beta(), -E.beta_bar(), X->one(), -X->one());
}

MobiusMap eta_map(const Extension& E) {
  const FieldPtr& X = E.ext();
  return MobiusMap(E.beta_bar(), -X->one(), E.beta(), -X->one());
}

MobiusMap eta_inv_map(const Extension& E) {
  const FieldPtr& X = E.ext();
  return MobiusMap(X->one(), -X->one(), E.beta(), -E.beta_bar());
}

// --- RationalMap

RationalMap::RationalMap(const Poly& num, const Poly& den)
    : num_(num), den_(den) {
  if (!num.field()->same(*den.field())) {
    throw std::domain_error("RationalMap: num and den over different fields");
  }
  if (den_.is_zero()) {
    throw std::domain_error("RationalMap: zero denominator");
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Elem s = den_.lead().inv();
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

RationalMap RationalMap::identity(const FieldPtr& f) {
  return RationalMap(Poly::x(f), Poly::constant(f, f->one()));
}

RationalMap RationalMap::power(const FieldPtr& f, unsigned n) {
  return RationalMap(Poly::monomial(f, n, f->one()),
                     Poly::constant(f, f->one()));
}

RationalMap RationalMap::from_mobius(const MobiusMap& m) {
  const FieldPtr& f = m.field();
  return RationalMap(Poly(f, {m.b(), m.a()}), Poly(f, {m.d(), m.c()}));
}

unsigned RationalMap::degree() const {
  return static_cast<unsigned>(std::max(num_.degree(), den_.degree()));
}

Point RationalMap::eval(const Point& p) const {
  const FieldPtr& F = num_.field();
  if (p.is_inf()) {
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return Point::infinity();
    if (dn < dd) return Point::finite(F->zero());
    return Point::finite(num_.lead() / den_.lead());
  }
  const Elem& x = p.value();
  if (x.field().same(*F)) {
    Elem d = den_.eval(x);
    if (d.is_zero()) return Point::infinity();
    return Point::finite(num_.eval(x) / d);
  }
  // coefficients embed into a quadratic extension of F
  const Field& X = x.field();
  if (!X.is_quadratic_ext() || !X.base()->same(*F)) {
    throw std::domain_error("point over " + X.describe() +
                            " applied to a map over " + F->describe());
  }
  auto lifted_eval = [&](const Poly& poly) {
    Elem acc = X.zero();
    const auto& cs = poly.coeffs();
    for (size_t i = cs.size(); i-- > 0;) {
      acc = acc * x + X.from_index(cs[i].index());
    }
    return acc;
  };
  Elem d = lifted_eval(den_);
  if (d.is_zero()) return Point::infinity();
  return Point::finite(lifted_eval(num_) / d);
}

RationalMap RationalMap::compose(const RationalMap& inner) const {
  const FieldPtr& F = num_.field();
  if (!F->same(*inner.field())) {
    throw std::domain_error("compose: maps over different fields");
  }
  unsigned D = degree();
  // f(N/Dn) written over the common denominator Dn^D
  std::vector<Poly> npow, dpow;
  npow.reserve(D + 1);
  dpow.reserve(D + 1);
  Poly one = Poly::constant(F, F->one());
  npow.push_back(one);
  dpow.push_back(one);
  for (unsigned i = 1; i <= D; ++i) {
    npow.push_back(npow.back() * inner.num_);
    dpow.push_back(dpow.back() * inner.den_);
  }
  Poly N(F), Dl(F);
  for (unsigned i = 0; i <= D; ++i) {
    Poly term = npow[i] * dpow[D - i];
    if (i <= static_cast<unsigned>(num_.degree()) && !num_.coeff(i).is_zero()) {
      N = N + term.scaled(num_.coeff(i));
    }
    if (i <= static_cast<unsigned>(den_.degree()) && !den_.coeff(i).is_zero()) {
      Dl = Dl + term.scaled(den_.coeff(i));
    }
  }
  return RationalMap(N, Dl);
}

RationalMap RationalMap::conjugate(const MobiusMap& m) const {
  RationalMap inner = compose(from_mobius(m));
  return from_mobius(m.inverse()).compose(inner);
}

bool operator==(const RationalMap& a, const RationalMap& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

// --- point lifting

Point lift_point(const Extension& E, const Point& p) {
  if (p.is_inf()) return p;
  const Elem& v = p.value();
  if (v.field().same(*E.ext())) return p;
  return Point::finite(E.embed(v));
}

Point descend_point(const Extension& E, const Point& p) {
  if (p.is_inf()) return p;
  auto down = E.descend(p.value());
  if (!down) {
    throw std::logic_error("descend_point: value is not rational over " +
                           E.base()->describe());
  }
  return Point::finite(*down);
}

bool base_side(const Extension& E, const Point& p) {
  return p.is_inf() || p.value().field().same(*E.base());
}

}  // namespace redchev
