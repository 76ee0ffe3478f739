#pragma once

#include <string>
#include <string_view>

#include "redchev/projmap.hpp"

namespace redchev {

// Public parameters of the toy commuting-map exchange: an extension (the
// field and alpha) and a base point of P^1(F_q).  Both parties evaluate
// tangent-Chebyshev maps at each other's public points; C_a o C_b = C_ab
// = C_b o C_a makes the shared values agree.  Pedagogical only: discrete
// logarithms in mu_{q+1} are trivial at desk scale.
struct KeyxParams {
  ExtPtr ext;
  Point x0;
};

// A secret degree n in [2, q^2] with gcd(n, q+1) = 1, so C_n permutes
// P^1(F_q); only n mod (q+1) matters for the induced map.
struct KeyxSecret {
  uint64_t n = 0;
};

// Deterministic sampling from the seed (splitmix64 stream), resampled
// until the coprimality constraint holds.
KeyxSecret keygen(const KeyxParams& params, uint64_t seed);

// C_n(x0) through the eta pipeline.
Point derive_public(const KeyxParams& params, const KeyxSecret& secret);

// C_n(peer_public); agrees on both sides by the semigroup law.
Point derive_shared(const KeyxParams& params, const KeyxSecret& secret,
                    const Point& peer_public);

// Wire format, one message per line:
//   KEYX1 <field-spec> <alpha> <x0> <public>
// with the element encodings of the encoding module and "inf" for points.
std::string encode_message(const KeyxParams& params, const Point& pub);

struct KeyxMessage {
  FieldPtr field;
  ExtPtr ext;
  Elem alpha;
  Point x0;
  Point pub;
};

KeyxMessage decode_message(std::string_view line);

}  // namespace redchev
