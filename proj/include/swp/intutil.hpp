// Small-integer number theory helpers: 64-bit modular arithmetic,
// deterministic primality, Pollard-rho factorization, checked powers.
#pragma once

#include <cstdint>
#include <vector>

namespace swp {

// (a * b) mod m without overflow, m < 2^63.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// (a ^ e) mod m.
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Prime factorization as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

// a^e for small integers; throws std::overflow_error if the result
// does not fit in int64.
std::int64_t checked_pow_i64(std::int64_t a, int e);

// Largest m with p^m | n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

// Euclidean remainder in [0, m).
std::int64_t floormod(std::int64_t a, std::int64_t m);

}  // namespace swp
