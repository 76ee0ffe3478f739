#include <doctest.h>

#include <numeric>
#include <set>

#include "redchev/cheby.hpp"
#include "redchev/encoding.hpp"
#include "redchev/keyx.hpp"

using namespace redchev;

namespace {

KeyxParams params_for(uint64_t p, unsigned k, uint64_t alpha_idx,
                      uint64_t x0_idx) {
  FieldPtr f = Field::make(p, k);
  ExtPtr e = Extension::make(f, f->from_index(alpha_idx));
  return KeyxParams{e, Point::finite(f->from_index(x0_idx))};
}

}  // namespace

TEST_CASE("keygen is deterministic and always coprime to q+1") {
  KeyxParams params = params_for(7, 1, 3, 1);
  for (uint64_t seed = 0; seed < 100; ++seed) {
    KeyxSecret s1 = keygen(params, seed);
    KeyxSecret s2 = keygen(params, seed);
    CHECK(s1.n == s2.n);
    CHECK(std::gcd(s1.n, uint64_t{8}) == 1);
    CHECK(s1.n >= 2);
    CHECK(s1.n <= 49);
  }
  // distinct seeds do explore the range
  std::set<uint64_t> values;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    values.insert(keygen(params, seed).n);
  }
  CHECK(values.size() > 10);
}

TEST_CASE("derive_public evaluates C_n at the base point") {
  KeyxParams params = params_for(7, 1, 3, 1);

  // C_3(1) with alpha = 3 over F_7: (3 + 3)/(1 + 2) = 2
  Point pub = derive_public(params, KeyxSecret{3});
  CHECK(pub == Point::finite(params.ext->base()->from_index(2)));

  // n = 1 mod the mu-order of eta(x0) acts as the identity on the orbit
  Elem y = eta_map(*params.ext)(params.x0).value();
  uint64_t d = element_order(y);
  CHECK(derive_public(params, KeyxSecret{d + 1}) == params.x0);

  // matches the coefficient evaluator for small degrees
  for (uint64_t n = 1; n <= 12; ++n) {
    CHECK(derive_public(params, KeyxSecret{n}) ==
          cheby_coeffs(ChebySpec{params.ext, n}).eval(params.x0));
  }
}

TEST_CASE("shared secrets agree by the semigroup law") {
  KeyxParams params = params_for(7, 1, 3, 1);
  KeyxSecret a{3}, b{5};
  Point pa = derive_public(params, a);
  Point pb = derive_public(params, b);
  Point sa = derive_shared(params, a, pb);
  Point sb = derive_shared(params, b, pa);
  CHECK(sa == sb);
  CHECK(sa == cheby_eval(ChebySpec{params.ext, 15}, params.x0));

  // b = 1 publishes the base point itself
  CHECK(derive_shared(params, KeyxSecret{1}, pa) == pa);

  for (auto [p, k, a_idx] :
       std::vector<std::tuple<uint64_t, unsigned, uint64_t>>{{13, 1, 2},
                                                             {2, 4, 8}}) {
    KeyxParams pr = params_for(p, k, a_idx, 1);
    for (uint64_t t = 0; t < 100; ++t) {
      KeyxSecret sa2 = keygen(pr, t);
      KeyxSecret sb2 = keygen(pr, t + 1000);
      CHECK(derive_shared(pr, sa2, derive_public(pr, sb2)) ==
            derive_shared(pr, sb2, derive_public(pr, sa2)));
    }
  }
}

TEST_CASE("wire format round trip and the documented line") {
  KeyxParams params = params_for(7, 1, 3, 1);
  Point pub = Point::finite(params.ext->base()->from_index(5));
  CHECK(encode_message(params, pub) == "KEYX1 7 3 1 5");

  KeyxMessage m = decode_message("KEYX1 7 3 1 5");
  CHECK(field_spec_string(*m.field) == "7");
  CHECK(m.alpha.index() == 3);
  CHECK(m.x0 == Point::finite(m.field->from_index(1)));
  CHECK(m.pub == Point::finite(m.field->from_index(5)));

  // infinity is a legal point encoding
  KeyxParams pinf{params.ext, Point::infinity()};
  std::string line = encode_message(pinf, pub);
  CHECK(decode_message(line).x0 == Point::infinity());

  // extension-field specs ride along unchanged
  KeyxParams p16 = params_for(2, 4, 8, 1);
  std::string line16 =
      encode_message(p16, derive_public(p16, KeyxSecret{3}));
  KeyxMessage m16 = decode_message(line16);
  CHECK(m16.field->order() == 16);
  CHECK(m16.alpha == p16.ext->alpha());
  CHECK(encode_message(KeyxParams{m16.ext, m16.x0}, m16.pub) == line16);
}

TEST_CASE("malformed wire lines are rejected") {
  CHECK_THROWS_AS(decode_message("KEYX9 7 3 1 5"), std::domain_error);
  CHECK_THROWS_AS(decode_message("NOPE 7 3 1 5"), std::domain_error);
  CHECK_THROWS_AS(decode_message("KEYX1 7 3 1"), std::domain_error);
  CHECK_THROWS_AS(decode_message("KEYX1 7 3 1 5 9"), std::domain_error);
  CHECK_THROWS_AS(decode_message("KEYX1 7 4 1 5"), std::domain_error);
  CHECK_THROWS_AS(decode_message("KEYX1 7 3 9 5"), std::domain_error);
  CHECK_THROWS_AS(decode_message("KEYX1 6 3 1 5"), std::domain_error);
  CHECK_THROWS_AS(decode_message(""), std::domain_error);
}

TEST_CASE("only n mod q+1 matters for the induced map") {
  KeyxParams params = params_for(13, 1, 2, 1);
  uint64_t m = 14;  // q + 1
  for (uint64_t n : {uint64_t{3}, uint64_t{5}, uint64_t{9}}) {
    CHECK(derive_public(params, KeyxSecret{n}) ==
          derive_public(params, KeyxSecret{n + 3 * m}));
  }
}
