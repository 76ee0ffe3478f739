#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace redchev {

// Deterministic trial-division primality test; adequate for the desk-scale
// bound on field characteristics.
bool is_prime(uint64_t n);

// Prime factorization by trial division, ascending, as (prime, exponent)
// pairs. n must be >= 1; factorize(1) is empty.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

// Distinct prime divisors of n, ascending.
std::vector<uint64_t> prime_factors(uint64_t n);

// Row n of Pascal's triangle modulo a prime p, i.e. C(n, 0..n) mod p.
// Uses the multiplicative recurrence with the powers of p tracked
// separately, so the whole row costs O(n) field operations.
std::vector<uint64_t> binom_row_mod_p(uint64_t n, uint64_t p);

// splitmix64 step: advances the state and returns one mixed 64-bit word.
uint64_t splitmix64(uint64_t& state);

}  // namespace redchev
