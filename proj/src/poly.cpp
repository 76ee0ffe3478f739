#include "redchev/poly.hpp"

#include <stdexcept>

namespace redchev {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs)
    : f_(std::move(f)), c_(std::move(coeffs)) {
  for (const Elem& e : c_) {
    if (!e.valid() || !e.field().same(*f_)) {
      throw std::domain_error("polynomial coefficient not over " +
                              f_->describe());
    }
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& f, const Elem& c) {
  return Poly(f, std::vector<Elem>{c});
}

Poly Poly::monomial(const FieldPtr& f, unsigned deg, const Elem& c) {
  std::vector<Elem> v(deg + 1, f->zero());
  v[deg] = c;
  return Poly(f, std::move(v));
}

Elem Poly::lead() const {
  if (c_.empty()) throw std::logic_error("lead of the zero polynomial");
  return c_.back();
}

Elem Poly::eval(const Elem& x) const {
  Elem acc = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::scaled(const Elem& s) const {
  if (s.is_zero()) return Poly(f_);
  std::vector<Elem> v = c_;
  for (Elem& e : v) e = e * s;
  return Poly(f_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw std::logic_error("monic of the zero polynomial");
  return scaled(lead().inv());
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Poly(a.f_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), a.f_->zero());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Poly(a.f_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.f_);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.f_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return Poly(a.f_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.f_->same(*b.f_) || a.c_.size() != b.c_.size()) return false;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].index() != b.c_[i].index()) return false;
  }
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldPtr& F = a.f_;
  if (a.degree() < b.degree()) return {Poly(F), a};
  Elem lead_inv = b.lead().inv();
  std::vector<Elem> rem = a.c_;
  size_t bs = b.c_.size();
  std::vector<Elem> quo(rem.size() - bs + 1, F->zero());
  for (size_t i = rem.size(); i-- > 0;) {
    if (i + 1 < bs) break;
    Elem q = rem[i] * lead_inv;
    if (q.is_zero()) continue;
    size_t off = i + 1 - bs;
    quo[off] = q;
    for (size_t j = 0; j < bs; ++j) rem[off + j] = rem[off + j] - q * b.c_[j];
  }
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

}  // namespace redchev
