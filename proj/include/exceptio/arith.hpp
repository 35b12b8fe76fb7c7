#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace exceptio {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
  // a, b < m
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 exp, u64 m);

// Inverse modulo a prime p, a != 0 mod p.
inline u64 invmod_prime(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

bool is_prime(const mpz_class& n);

// Residue of an arbitrary integer in [0, m).
inline u64 mod_u64(const mpz_class& a, u64 m) {
  return static_cast<u64>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(m)));
}

struct PrimePower {
  mpz_class prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factorisation of |n| into primes, ascending. |n| <= 1 gives an empty list.
// Trial division, then Pollard-Brent on the cofactor.
std::vector<PrimePower> factor_integer(const mpz_class& n);

std::vector<mpz_class> prime_divisors(const mpz_class& n);

// All positive divisors of |n| in ascending order; n != 0.
std::vector<mpz_class> divisors(const mpz_class& n);

bool is_square_free(const mpz_class& n);

// Non-negative rational a/b in lowest terms.
struct Rational {
  u64 num = 0;
  u64 den = 1;

  Rational() = default;
  Rational(u64 n, u64 d) : num(n), den(d) {
    const u64 g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace exceptio
