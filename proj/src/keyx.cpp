#include "redchev/keyx.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "redchev/cheby.hpp"
#include "redchev/encoding.hpp"
#include "redchev/numutil.hpp"

namespace redchev {

namespace {

void check_params(const KeyxParams& params) {
  if (!params.ext) throw std::domain_error("keyx: no extension context");
  if (!params.x0.is_inf() &&
      !params.x0.value().field().same(*params.ext->base())) {
    throw std::domain_error("keyx: x0 must lie in P^1(F_q)");
  }
}

}  // namespace

KeyxSecret keygen(const KeyxParams& params, uint64_t seed) {
  check_params(params);
  uint64_t q = params.ext->q();
  uint64_t range = q * q - 1;  // n in [2, q^2]
  uint64_t state = seed;
  while (true) {
    uint64_t n = 2 + splitmix64(state) % range;
    if (std::gcd(n, q + 1) == 1) return KeyxSecret{n};
  }
}

Point derive_public(const KeyxParams& params, const KeyxSecret& secret) {
  check_params(params);
  return cheby_eval(ChebySpec{params.ext, secret.n}, params.x0);
}

Point derive_shared(const KeyxParams& params, const KeyxSecret& secret,
                    const Point& peer_public) {
  check_params(params);
  if (!peer_public.is_inf() &&
      !peer_public.value().field().same(*params.ext->base())) {
    throw std::domain_error("keyx: peer public must lie in P^1(F_q)");
  }
  return cheby_eval(ChebySpec{params.ext, secret.n}, peer_public);
}

std::string encode_message(const KeyxParams& params, const Point& pub) {
  check_params(params);
  std::ostringstream os;
  os << "KEYX1 " << field_spec_string(*params.ext->base()) << " "
     << elem_string(params.ext->alpha()) << " " << point_string(params.x0)
     << " " << point_string(pub);
  return os.str();
}

KeyxMessage decode_message(std::string_view line) {
  std::vector<std::string> tok;
  {
    std::istringstream is{std::string(line)};
    std::string t;
    while (is >> t) tok.push_back(t);
  }
  if (tok.size() != 5) {
    throw std::domain_error("keyx message: expected 5 fields, got " +
                            std::to_string(tok.size()));
  }
  if (tok[0] != "KEYX1") {
    if (tok[0].rfind("KEYX", 0) == 0) {
      throw std::domain_error("keyx message: unsupported version '" + tok[0] +
                              "'");
    }
    throw std::domain_error("keyx message: bad tag '" + tok[0] + "'");
  }
  KeyxMessage m;
  m.field = parse_field_spec(tok[1]);
  m.alpha = parse_elem(m.field, tok[2]);
  m.ext = Extension::make(m.field, m.alpha);  // validates alpha
  m.x0 = parse_point(m.field, tok[3]);
  m.pub = parse_point(m.field, tok[4]);
  return m;
}

}  // namespace redchev
