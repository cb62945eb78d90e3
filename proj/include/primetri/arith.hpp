#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace primetri {

// Prime factorization as (prime, exponent) pairs, ascending by prime.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  // Product of prime^exponent; reconstructs the factored input.
  std::uint64_t value() const;
};

// Greatest common divisor of two signed integers; gcd(0, 0) = 0.
std::uint64_t gcd(std::int64_t a, std::int64_t b);

// base^exp mod modulus for modulus >= 1. 128-bit intermediates keep every
// modulus below 2^63 overflow-free.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

// Deterministic trial division. All callers are desk-scale.
bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);

// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol when n is
// an odd prime.
int jacobi(std::int64_t a, std::uint64_t n);

// Multiplicative inverse of a mod m, absent when gcd(a, m) != 1.
std::optional<std::uint64_t> mod_inverse(std::int64_t a, std::uint64_t m);

// Solvability of x^2 = r (mod m) for r coprime to m. Decided prime power by
// prime power: Legendre symbol 1 at every odd prime divisor, any odd r for
// modulus 2, r = 1 (mod 4) when 4 | m, r = 1 (mod 8) when 8 | m.
bool is_quadratic_residue(std::int64_t r, std::uint64_t m);

// Smallest x in [0, m) with x^2 = r (mod m), by exhaustive search.
std::optional<std::uint64_t> sqrt_mod(std::int64_t r, std::uint64_t m);

struct Congruence {
  std::int64_t residue = 0;
  std::uint64_t modulus = 1;
};

// Simultaneous solution of a congruence system. Non-coprime moduli are
// handled by pairwise consistency merging; the result is the smallest
// nonnegative solution together with the lcm of the moduli, or absent when
// the system is inconsistent.
std::optional<std::pair<std::uint64_t, std::uint64_t>> crt(
    const std::vector<Congruence>& system);

}  // namespace primetri
