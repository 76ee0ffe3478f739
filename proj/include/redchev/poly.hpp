#pragma once

#include <utility>
#include <vector>

#include "redchev/ffield.hpp"

namespace redchev {

// Dense univariate polynomial over a Field, little-endian coefficients,
// no trailing zeros (the zero polynomial has an empty coefficient vector).
class Poly {
 public:
  explicit Poly(FieldPtr f) : f_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Elem> coeffs);

  static Poly constant(const FieldPtr& f, const Elem& c);
  static Poly monomial(const FieldPtr& f, unsigned deg, const Elem& c);
  static Poly x(const FieldPtr& f) { return monomial(f, 1, f->one()); }

  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
  Elem lead() const;
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem eval(const Elem& x) const;
  Poly scaled(const Elem& c) const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Quotient and remainder; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

 private:
  void trim();

  FieldPtr f_;
  std::vector<Elem> c_;
};

}  // namespace redchev
