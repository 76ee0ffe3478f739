#pragma once

#include <string>
#include <vector>

#include "redchev/poly.hpp"

namespace redchev {

// A point of P^1 over some field: a field element or the point at infinity.
// Infinity carries no field and compares equal to itself across fields.
class Point {
 public:
  Point() = default;  // infinity

  static Point infinity() { return Point(); }
  static Point finite(const Elem& v) {
    Point p;
    p.inf_ = false;
    p.v_ = v;
    return p;
  }

  bool is_inf() const { return inf_; }
  const Elem& value() const;

  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  bool inf_ = true;
  Elem v_;
};

// All q+1 points of P^1 over f, finite points in enumeration order followed
// by infinity.
std::vector<Point> projective_line(const FieldPtr& f);

// Projective multiplication: inf * x = inf for x != 0, 0 * inf is undefined.
Point proj_mul(const Point& a, const Point& b);
// Projective n-th power, n >= 1: inf -> inf, 0 -> 0, else the field power.
Point proj_pow(const Point& a, uint64_t n);

// Degree-one map x -> (ax+b)/(cx+d) with ad - bc != 0, stored modulo
// scalars: the first nonzero of (a, b, c, d) is normalized to 1, which makes
// equality a plain coefficient comparison.
class MobiusMap {
 public:
  MobiusMap(const Elem& a, const Elem& b, const Elem& c, const Elem& d);

  static MobiusMap identity(const FieldPtr& f);
  static MobiusMap reciprocal(const FieldPtr& f);  // x -> 1/x

  const FieldPtr& field() const { return f_; }
  const Elem& a() const { return a_; }
  const Elem& b() const { return b_; }
  const Elem& c() const { return c_; }
  const Elem& d() const { return d_; }

  // Projective evaluation: inf -> a/c (inf when c = 0); a finite pole
  // (cx + d = 0) -> inf.  Points over the base of a quadratic extension
  // field embed first.
  Point apply(const Point& p) const;
  Point operator()(const Point& p) const { return apply(p); }

  MobiusMap compose(const MobiusMap& inner) const;  // this after inner
  MobiusMap inverse() const;

  friend bool operator==(const MobiusMap& x, const MobiusMap& y);
  friend bool operator!=(const MobiusMap& x, const MobiusMap& y) {
    return !(x == y);
  }

 private:
  FieldPtr f_;
  Elem a_, b_, c_, d_;
};

// rho(x) = (x - beta_bar)/(x - beta) over F_{q^2}; maps P^1(F_q) bijectively
// onto mu_{q+1}.
MobiusMap rho_map(const Extension& E);
// rho^{-1}(x) = (beta*x - beta_bar)/(x - 1).
MobiusMap rho_inv_map(const Extension& E);
// eta(x) = rho(1/x) = (beta_bar*x - 1)/(beta*x - 1).
MobiusMap eta_map(const Extension& E);
// eta^{-1}(x) = (x - 1)/(beta*x - beta_bar).
MobiusMap eta_inv_map(const Extension& E);

// Reduced fraction of polynomials.  Canonical form: gcd(num, den) = 1 and
// den monic, so equality of maps is equality of coefficient vectors.
class RationalMap {
 public:
  RationalMap(const Poly& num, const Poly& den);

  static RationalMap identity(const FieldPtr& f);
  static RationalMap power(const FieldPtr& f, unsigned n);  // x^n
  static RationalMap from_mobius(const MobiusMap& m);

  const FieldPtr& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  unsigned degree() const;

  // num(x)/den(x) with poles evaluating to inf; at inf the value follows
  // from the degree comparison and leading coefficients.  Points over a
  // quadratic extension of the coefficient field embed coefficientwise.
  Point eval(const Point& p) const;

  RationalMap compose(const RationalMap& inner) const;  // this after inner
  // m^{-1} o f o m
  RationalMap conjugate(const MobiusMap& m) const;

  friend bool operator==(const RationalMap& a, const RationalMap& b);
  friend bool operator!=(const RationalMap& a, const RationalMap& b) {
    return !(a == b);
  }

 private:
  Poly num_, den_;
};

// Re-tag a point of P^1(F_q) as a point of P^1(F_{q^2}); indices are stable
// under the embedding.  Points already over ext() pass through.
Point lift_point(const Extension& E, const Point& p);
// Inverse of lift_point; throws if the value is not rational over F_q.
Point descend_point(const Extension& E, const Point& p);
// True when the point is infinity or tagged with the base field.
bool base_side(const Extension& E, const Point& p);

}  // namespace redchev
