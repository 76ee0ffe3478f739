#include "redchev/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "redchev/numutil.hpp"

namespace redchev {

namespace {

// --- dense polynomials over F_p as raw digit vectors (irreducibility only)

using DPoly = std::vector<uint64_t>;

void dtrim(DPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

DPoly dmulmod(const DPoly& a, const DPoly& b, const DPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  DPoly t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      t[i + j] = (t[i + j] + a[i] * b[j]) % p;
    }
  }
  size_t k = f.size() - 1;  // f monic of degree k
  for (size_t i = t.size(); i-- > k;) {
    uint64_t c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (size_t j = 0; j < k; ++j) {
      t[i - k + j] = (t[i - k + j] + c * (p - f[j])) % p;
    }
  }
  t.resize(std::min(t.size(), k));
  dtrim(t);
  return t;
}

// x^e mod f
DPoly dxpowmod(uint64_t e, const DPoly& f, uint64_t p) {
  DPoly r{1};
  DPoly b{0, 1};
  while (e) {
    if (e & 1) r = dmulmod(r, b, f, p);
    b = dmulmod(b, b, f, p);
    e >>= 1;
  }
  return r;
}

DPoly dmod(DPoly a, const DPoly& b, uint64_t p) {
  // b nonzero; returns a mod b with b scaled monic on the fly
  dtrim(a);
  uint64_t lead = b.back();
  uint64_t lead_inv = 1;
  {
    uint64_t e = p - 2, base = lead % p;
    while (e) {
      if (e & 1) lead_inv = lead_inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
  }
  while (a.size() >= b.size()) {
    uint64_t c = a.back() * lead_inv % p;
    size_t off = a.size() - b.size();
    if (c != 0) {
      for (size_t j = 0; j < b.size(); ++j) {
        a[off + j] = (a[off + j] + c * (p - b[j] % p)) % p;
      }
    }
    a.pop_back();
    dtrim(a);
    if (a.empty()) break;
  }
  return a;
}

DPoly dgcd(DPoly a, DPoly b, uint64_t p) {
  dtrim(a);
  dtrim(b);
  while (!b.empty()) {
    DPoly r = dmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin test for a monic f of degree k >= 2 over F_p:
// x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for each prime r | k.
bool dirreducible(const DPoly& f, uint64_t p) {
  size_t k = f.size() - 1;
  uint64_t pk = 1;
  for (size_t i = 0; i < k; ++i) pk *= p;
  DPoly frob = dxpowmod(pk, f, p);
  DPoly x{0, 1};
  if (frob != x) return false;
  for (uint64_t r : prime_factors(k)) {
    uint64_t pd = 1;
    for (size_t i = 0; i < k / r; ++i) pd *= p;
    DPoly g = dxpowmod(pd, f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    dtrim(g);
    DPoly d = dgcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

}  // namespace

// --- Field

Field::Field(uint64_t p, unsigned k, std::vector<uint64_t> irr)
    : p_(p), k_(k), mod_(std::move(irr)) {
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) q_ *= p;
}

Field::Field(FieldPtr base, uint64_t h0, uint64_t h1)
    : base_(std::move(base)), p_(base_->characteristic()), k_(2) {
  q_ = base_->order() * base_->order();
  mod_ = {h0, h1, 1};
}

FieldPtr Field::make(uint64_t p, unsigned k, uint64_t order_bound) {
  if (!is_prime(p)) {
    throw std::domain_error("make_field: " + std::to_string(p) +
                            " is not prime");
  }
  if (k == 0) throw std::domain_error("make_field: k must be positive");
  if (order_bound > kMaxOrderBound) {
    throw std::domain_error("make_field: order bound exceeds the supported " +
                            std::to_string(kMaxOrderBound));
  }
  uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > order_bound / p) {
      throw std::domain_error("make_field: p^k exceeds the order bound " +
                              std::to_string(order_bound));
    }
    q *= p;
  }
  if (k == 1) {
    return FieldPtr(new Field(p, 1, {}));
  }
  // Lexicographically smallest monic irreducible of degree k.  Candidates
  // x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the coefficient tuple
  // (c_{k-1}, ..., c_0), which matches the integer order of
  // m = sum c_j p^j.
  for (uint64_t m = 0; m < q; ++m) {
    DPoly f(k + 1, 0);
    uint64_t t = m;
    for (unsigned j = 0; j < k; ++j) {
      f[j] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (dirreducible(f, p)) {
      return FieldPtr(new Field(p, k, std::move(f)));
    }
  }
  throw std::logic_error("make_field: no irreducible polynomial found");
}

unsigned Field::digits() const {
  return base_ ? 2 * base_->digits() : k_;
}

void Field::decode(uint64_t v, uint64_t* d) const {
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
}

uint64_t Field::encode(const uint64_t* d) const {
  uint64_t v = 0;
  for (unsigned i = k_; i-- > 0;) v = v * p_ + d[i];
  return v;
}

Elem Field::from_index(uint64_t v) const {
  if (v >= q_) {
    throw std::domain_error("from_index: index " + std::to_string(v) +
                            " out of range for " + describe());
  }
  return Elem(this, v);
}

Elem Field::from_int(uint64_t m) const {
  return Elem(this, m % p_);
}

Elem Field::from_coeffs(std::span<const uint64_t> c) const {
  if (c.size() != digits()) {
    throw std::domain_error("from_coeffs: expected " +
                            std::to_string(digits()) + " coefficients for " +
                            describe() + ", got " + std::to_string(c.size()));
  }
  for (uint64_t d : c) {
    if (d >= p_) {
      throw std::domain_error("from_coeffs: coefficient " + std::to_string(d) +
                              " not reduced modulo " + std::to_string(p_));
    }
  }
  if (base_) {
    unsigned h = base_->digits();
    Elem a0 = base_->from_coeffs(c.subspan(0, h));
    Elem a1 = base_->from_coeffs(c.subspan(h, h));
    return Elem(this, a0.index() + base_->order() * a1.index());
  }
  return Elem(this, encode(c.data()));
}

std::vector<uint64_t> Field::coeffs(const Elem& a) const {
  if (!a.valid() || !a.field().same(*this)) {
    throw std::domain_error("coeffs: element not over " + describe());
  }
  if (base_) {
    auto [a0, a1] = parts(a);
    std::vector<uint64_t> out = base_->coeffs(a0);
    std::vector<uint64_t> hi = base_->coeffs(a1);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
  }
  std::vector<uint64_t> d(k_);
  decode(a.index(), d.data());
  return d;
}

std::pair<Elem, Elem> Field::parts(const Elem& a) const {
  if (!base_) throw std::logic_error("parts: not an extension field");
  uint64_t qb = base_->order();
  return {Elem(base_.get(), a.index() % qb), Elem(base_.get(), a.index() / qb)};
}

Elem Field::from_parts(const Elem& a0, const Elem& a1) const {
  if (!base_) throw std::logic_error("from_parts: not an extension field");
  if (!a0.field().same(*base_) || !a1.field().same(*base_)) {
    throw std::domain_error("from_parts: components not over the base field");
  }
  return Elem(this, a0.index() + base_->order() * a1.index());
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || q_ != o.q_ || k_ != o.k_ || mod_ != o.mod_) return false;
  if (static_cast<bool>(base_) != static_cast<bool>(o.base_)) return false;
  return !base_ || base_->same(*o.base_);
}

std::string Field::describe() const {
  std::ostringstream os;
  if (base_) {
    os << "F_{" << base_->order() << "^2}";
  } else if (k_ == 1) {
    os << "F_" << p_;
  } else {
    os << "F_{" << p_ << "^" << k_ << "}";
  }
  return os.str();
}

uint64_t Field::add_idx(uint64_t a, uint64_t b) const {
  if (base_) {
    uint64_t qb = base_->order();
    uint64_t lo = base_->add_idx(a % qb, b % qb);
    uint64_t hi = base_->add_idx(a / qb, b / qb);
    return lo + qb * hi;
  }
  if (k_ == 1) {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t da[64], db[64];
  decode(a, da);
  decode(b, db);
  for (unsigned i = 0; i < k_; ++i) {
    da[i] += db[i];
    if (da[i] >= p_) da[i] -= p_;
  }
  return encode(da);
}

uint64_t Field::neg_idx(uint64_t a) const {
  if (base_) {
    uint64_t qb = base_->order();
    return base_->neg_idx(a % qb) + qb * base_->neg_idx(a / qb);
  }
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint64_t d[64];
  decode(a, d);
  for (unsigned i = 0; i < k_; ++i) {
    if (d[i] != 0) d[i] = p_ - d[i];
  }
  return encode(d);
}

uint64_t Field::sub_idx(uint64_t a, uint64_t b) const {
  return add_idx(a, neg_idx(b));
}

uint64_t Field::mul_idx(uint64_t a, uint64_t b) const {
  if (base_) {
    // (a0 + a1 b)(b0 + b1 b) with b^2 = -h1*b - h0
    uint64_t qb = base_->order();
    const Field& B = *base_;
    uint64_t a0 = a % qb, a1 = a / qb, b0 = b % qb, b1 = b / qb;
    uint64_t t00 = B.mul_idx(a0, b0);
    uint64_t t11 = B.mul_idx(a1, b1);
    uint64_t cross = B.add_idx(B.mul_idx(a0, b1), B.mul_idx(a1, b0));
    uint64_t lo = B.sub_idx(t00, B.mul_idx(t11, mod_[0]));
    uint64_t hi = B.sub_idx(cross, B.mul_idx(t11, mod_[1]));
    return lo + qb * hi;
  }
  if (k_ == 1) return a * b % p_;
  uint64_t da[64], db[64], t[128] = {0};
  decode(a, da);
  decode(b, db);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      t[i + j] = (t[i + j] + da[i] * db[j]) % p_;
    }
  }
  for (unsigned i = 2 * k_ - 1; i-- > k_;) {
    uint64_t c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      t[i - k_ + j] = (t[i - k_ + j] + c * (p_ - mod_[j])) % p_;
    }
  }
  return encode(t);
}

uint64_t Field::pow_idx(uint64_t a, int64_t e) const {
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::domain_error("pow: negative exponent of zero");
  }
  uint64_t m = q_ - 1;
  uint64_t r = static_cast<uint64_t>(((e % static_cast<int64_t>(m)) +
                                      static_cast<int64_t>(m)) %
                                     static_cast<int64_t>(m));
  uint64_t acc = 1;
  uint64_t base = a;
  while (r) {
    if (r & 1) acc = mul_idx(acc, base);
    base = mul_idx(base, base);
    r >>= 1;
  }
  return acc;
}

uint64_t Field::inv_idx(uint64_t a) const {
  if (a == 0) throw std::domain_error("inversion by zero in " + describe());
  return pow_idx(a, static_cast<int64_t>(q_) - 2);
}

// --- Elem

namespace {

const Field& require_same(const Elem& a, const Elem& b) {
  if (!a.valid() || !b.valid()) {
    throw std::logic_error("arithmetic on a default-constructed element");
  }
  const Field& fa = a.field();
  if (a.field_ptr() != b.field_ptr() && !fa.same(b.field())) {
    throw std::domain_error("mismatched field contexts: " + fa.describe() +
                            " vs " + b.field().describe());
  }
  return fa;
}

}  // namespace

const Field& Elem::field() const {
  if (!f_) throw std::logic_error("element has no field");
  return *f_;
}

Elem operator+(const Elem& a, const Elem& b) {
  const Field& f = require_same(a, b);
  return Elem(a.f_, f.add_idx(a.v_, b.v_));
}

Elem operator-(const Elem& a, const Elem& b) {
  const Field& f = require_same(a, b);
  return Elem(a.f_, f.sub_idx(a.v_, b.v_));
}

Elem operator*(const Elem& a, const Elem& b) {
  const Field& f = require_same(a, b);
  return Elem(a.f_, f.mul_idx(a.v_, b.v_));
}

Elem operator/(const Elem& a, const Elem& b) {
  const Field& f = require_same(a, b);
  return Elem(a.f_, f.mul_idx(a.v_, f.inv_idx(b.v_)));
}

Elem Elem::operator-() const { return Elem(f_, field().neg_idx(v_)); }

Elem Elem::inv() const { return Elem(f_, field().inv_idx(v_)); }

Elem Elem::pow(int64_t e) const { return Elem(f_, field().pow_idx(v_, e)); }

bool operator==(const Elem& a, const Elem& b) {
  if (a.f_ == b.f_) return a.v_ == b.v_;
  if (!a.f_ || !b.f_) return false;
  return a.f_->same(*b.f_) && a.v_ == b.v_;
}

// --- alpha enumeration

bool is_valid_alpha(const Elem& alpha) {
  const Field& f = alpha.field();
  if (f.is_quadratic_ext()) {
    throw std::domain_error(
        "is_valid_alpha: quadratic extension towers are not supported");
  }
  uint64_t q = f.order();
  if (f.characteristic() == 2) {
    // absolute trace x + x^2 + x^4 + ... + x^{q/2}
    Elem t = alpha;
    Elem s = alpha;
    for (uint64_t m = 2; m < q; m *= 2) {
      t = t * t;
      s = s + t;
    }
    return s.is_one();
  }
  if (alpha.is_zero()) return false;
  Elem r = alpha.pow(static_cast<int64_t>((q - 1) / 2));
  return r == -f.one();
}

std::vector<Elem> enumerate_alphas(const FieldPtr& f) {
  std::vector<Elem> out;
  for (uint64_t v = 0; v < f->order(); ++v) {
    Elem a = f->from_index(v);
    if (is_valid_alpha(a)) out.push_back(a);
  }
  return out;
}

uint64_t element_order(const Elem& a) {
  if (a.is_zero()) throw std::domain_error("element_order: zero element");
  uint64_t m = a.field().order() - 1;
  uint64_t t = m;
  for (uint64_t r : prime_factors(m)) {
    while (t % r == 0 && a.pow(static_cast<int64_t>(t / r)).is_one()) {
      t /= r;
    }
  }
  return t;
}

// --- Extension

ExtPtr Extension::make(FieldPtr base, const Elem& alpha) {
  if (!alpha.valid() || !alpha.field().same(*base)) {
    throw std::domain_error("make_extension: alpha not over the base field");
  }
  if (!is_valid_alpha(alpha)) {
    throw std::domain_error("make_extension: alpha = " +
                            std::to_string(alpha.index()) +
                            " does not give an irreducible quadratic over " +
                            base->describe());
  }
  auto E = std::shared_ptr<Extension>(new Extension());
  E->base_ = base;
  bool even = base->characteristic() == 2;
  uint64_t h0 = even ? alpha.index() : base->neg_idx(alpha.index());
  uint64_t h1 = even ? 1 : 0;
  E->ext_ = FieldPtr(new Field(base, h0, h1));
  const Field* X = E->ext_.get();
  uint64_t q = base->order();
  E->alpha_ = base->from_index(alpha.index());
  E->beta_ = X->from_index(q);  // the class of x: pair (0, 1)
  E->beta_bar_ = E->frobenius(E->beta_);
  E->trace_ = E->beta_ + E->beta_bar_;
  // Smallest generator of F_{q^2}^* by enumeration order, then the
  // canonical element of order q+1.
  uint64_t full = q * q - 1;
  std::vector<uint64_t> rs = prime_factors(full);
  for (uint64_t v = 1; v < q * q; ++v) {
    Elem g = X->from_index(v);
    bool generator = true;
    for (uint64_t r : rs) {
      if (g.pow(static_cast<int64_t>(full / r)).is_one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      E->gen_ = g;
      break;
    }
  }
  E->mu_gen_ = E->gen_.pow(static_cast<int64_t>(q - 1));
  return E;
}

Elem Extension::embed(const Elem& a) const {
  if (!a.field().same(*base_)) {
    throw std::domain_error("embed: element not over " + base_->describe());
  }
  return ext_->from_index(a.index());
}

std::optional<Elem> Extension::descend(const Elem& a) const {
  if (!a.field().same(*ext_)) {
    throw std::domain_error("descend: element not over " + ext_->describe());
  }
  if (a.index() >= base_->order()) return std::nullopt;
  return base_->from_index(a.index());
}

Elem Extension::frobenius(const Elem& a) const {
  // conj(a0 + a1*beta) = a0 + a1*beta_bar with beta_bar = -h1 - beta
  auto [a0, a1] = ext_->parts(a);
  uint64_t h1 = ext_->modulus()[1];
  Elem lo = a0 - a1 * base_->from_index(h1);
  return ext_->from_parts(lo, -a1);
}

std::vector<Elem> Extension::mu_elements() const {
  std::vector<Elem> out;
  out.reserve(q() + 1);
  Elem u = ext_->one();
  for (uint64_t i = 0; i <= q(); ++i) {
    out.push_back(u);
    u = u * mu_gen_;
  }
  return out;
}

}  // namespace redchev
