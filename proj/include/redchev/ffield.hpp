#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace redchev {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Extension;
using ExtPtr = std::shared_ptr<const Extension>;

// Element of a finite field, stored as its enumeration index in [0, order).
// For F_{p^k} the index packs the little-endian base-p coefficient vector;
// for a quadratic extension F_{q^2} it packs the pair (a0, a1) with
// a0 + a1*beta as a0 + q*a1.  Elements keep a raw pointer to their field;
// the owning FieldPtr (or Extension) must outlive them.
class Elem {
 public:
  Elem() = default;

  uint64_t index() const { return v_; }
  const Field& field() const;
  const Field* field_ptr() const { return f_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Elem operator-() const;
  Elem inv() const;
  Elem pow(int64_t e) const;

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);

  // Equal iff the fields agree structurally and the indices match.
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  friend class Field;
  Elem(const Field* f, uint64_t v) : f_(f), v_(v) {}

  const Field* f_ = nullptr;
  uint64_t v_ = 0;
};

// Exact arithmetic in a finite field.  Two layers exist: F_{p^k} as
// F_p[t]/(irr) with the lexicographically smallest monic irreducible, and a
// quadratic extension F_q[x]/h built through Extension.  Fields are
// immutable after construction and safe to share across threads; every
// operation is a pure function of its inputs.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static constexpr uint64_t kDefaultOrderBound = uint64_t{1} << 20;
  // Hard ceiling keeping every intermediate product within uint64.
  static constexpr uint64_t kMaxOrderBound = uint64_t{1} << 31;

  // F_{p^k}.  The modulus for k >= 2 is the lexicographically smallest
  // monic irreducible of degree k, coefficients compared from degree k-1
  // down to the constant term; deterministic across runs.
  static FieldPtr make(uint64_t p, unsigned k = 1,
                       uint64_t order_bound = kDefaultOrderBound);

  uint64_t characteristic() const { return p_; }
  uint64_t order() const { return q_; }
  // Degree over the coefficient field: k for F_{p^k}, 2 for an extension.
  unsigned degree() const { return k_; }
  // Number of base-p digits in the flattened coefficient vector.
  unsigned digits() const;
  const FieldPtr& base() const { return base_; }
  bool is_quadratic_ext() const { return base_ != nullptr; }

  // Monic modulus, little-endian, length degree()+1.  Entries are base-p
  // digits for F_{p^k} (empty when k == 1) and base-field indices for a
  // quadratic extension.
  const std::vector<uint64_t>& modulus() const { return mod_; }

  Elem zero() const { return Elem(this, 0); }
  Elem one() const { return Elem(this, 1); }
  Elem from_index(uint64_t v) const;
  // m mod p as a constant polynomial (the image of the integer m).
  Elem from_int(uint64_t m) const;
  // Little-endian base-p digit vector, length digits().
  Elem from_coeffs(std::span<const uint64_t> c) const;
  std::vector<uint64_t> coeffs(const Elem& a) const;

  // Components (a0, a1) of a0 + a1*beta over base(); extension layer only.
  std::pair<Elem, Elem> parts(const Elem& a) const;
  // a0 + a1*beta from base-field components; extension layer only.
  Elem from_parts(const Elem& a0, const Elem& a1) const;

  bool same(const Field& o) const;
  std::string describe() const;

  // Index-level engine used by Elem's operators.
  uint64_t add_idx(uint64_t a, uint64_t b) const;
  uint64_t sub_idx(uint64_t a, uint64_t b) const;
  uint64_t neg_idx(uint64_t a) const;
  uint64_t mul_idx(uint64_t a, uint64_t b) const;
  uint64_t inv_idx(uint64_t a) const;
  uint64_t pow_idx(uint64_t a, int64_t e) const;

 private:
  friend class Extension;
  Field(uint64_t p, unsigned k, std::vector<uint64_t> irr);
  Field(FieldPtr base, uint64_t h0, uint64_t h1);

  void decode(uint64_t v, uint64_t* d) const;
  uint64_t encode(const uint64_t* d) const;

  FieldPtr base_;              // null for the F_{p^k} layer
  uint64_t p_ = 0;
  uint64_t q_ = 0;
  unsigned k_ = 0;
  std::vector<uint64_t> mod_;  // monic, little-endian, length k_+1
};

// True iff x^2 - alpha (odd q) or x^2 + x + alpha (even q) is irreducible
// over alpha's field: a quadratic-residue test for odd q, the absolute
// trace test Tr_{F_q/F_2}(alpha) = 1 for even q.
bool is_valid_alpha(const Elem& alpha);

// All valid alpha in enumeration (index) order; exactly floor(q/2) of them.
std::vector<Elem> enumerate_alphas(const FieldPtr& f);

// Multiplicative order of a nonzero element.
uint64_t element_order(const Elem& a);

// A choice of irreducible quadratic h over F_q together with the extension
// F_{q^2} = F_q[x]/h, beta = the class of x, and beta_bar = beta^q.
// For odd q, h = x^2 - alpha and beta_bar = -beta; for even q,
// h = x^2 + x + alpha and beta_bar = beta + 1.
class Extension {
 public:
  static ExtPtr make(FieldPtr base, const Elem& alpha);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }
  uint64_t q() const { return base_->order(); }
  bool even_char() const { return base_->characteristic() == 2; }

  const Elem& alpha() const { return alpha_; }   // over base()
  const Elem& beta() const { return beta_; }     // over ext()
  const Elem& beta_bar() const { return beta_bar_; }
  // beta + beta_bar over ext(): 0 for odd q, 1 for even q.
  const Elem& trace_beta() const { return trace_; }

  Elem embed(const Elem& a) const;                  // F_q -> F_{q^2}
  std::optional<Elem> descend(const Elem& a) const; // inverse, when rational
  Elem frobenius(const Elem& a) const;              // a^q on F_{q^2}

  // Smallest multiplicative generator of F_{q^2}^* in enumeration order.
  const Elem& field_generator() const { return gen_; }
  // field_generator()^(q-1): multiplicative order exactly q+1.
  const Elem& mu_generator() const { return mu_gen_; }
  // The q+1 elements of mu_{q+1} as successive powers of mu_generator().
  std::vector<Elem> mu_elements() const;

 private:
  Extension() = default;

  FieldPtr base_;
  FieldPtr ext_;
  Elem alpha_, beta_, beta_bar_, trace_, gen_, mu_gen_;
};

}  // namespace redchev
