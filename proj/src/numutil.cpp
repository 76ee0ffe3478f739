#include "redchev/numutil.hpp"

#include <stdexcept>

namespace redchev {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

namespace {

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<uint64_t> binom_row_mod_p(uint64_t n, uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("binom_row_mod_p: p must be prime");
  std::vector<uint64_t> row(n + 1);
  // C(n, j+1) = C(n, j) * (n-j) / (j+1).  Keep the p-free unit and the
  // exponent of p separately; the entry is 0 exactly when the exponent
  // is positive.
  uint64_t unit = 1;
  int64_t pexp = 0;
  row[0] = 1;
  for (uint64_t j = 0; j < n; ++j) {
    uint64_t m1 = n - j;
    while (m1 % p == 0) {
      m1 /= p;
      ++pexp;
    }
    unit = unit * (m1 % p) % p;
    uint64_t m2 = j + 1;
    while (m2 % p == 0) {
      m2 /= p;
      --pexp;
    }
    unit = unit * pow_mod(m2 % p, p - 2, p) % p;
    row[j + 1] = pexp > 0 ? 0 : unit;
  }
  return row;
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace redchev
