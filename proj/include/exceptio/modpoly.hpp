#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exceptio/arith.hpp"
#include "exceptio/intpoly.hpp"

namespace exceptio {

// Polynomial over Z/p for a prime p < 2^64, coefficients ascending in [0, p).
class ModPolynomial {
 public:
  ModPolynomial(u64 p, std::vector<u64> coeffs);

  u64 modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 leading() const { return c_.back(); }
  u64 operator()(u64 x) const;

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

 private:
  u64 p_;
  std::vector<u64> c_;
};

// Throws NotPrime unless p is prime.
ModPolynomial reduce_mod(const IntPolynomial& f, u64 p);

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial derivative(const ModPolynomial& f);
ModPolynomial make_monic(const ModPolynomial& f);

// Quotient and remainder; b nonzero.
std::pair<ModPolynomial, ModPolynomial> divrem(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b);

// Monic gcd; gcd(0, 0) = 0.
ModPolynomial gcd(ModPolynomial a, ModPolynomial b);

// base^e mod m by square-and-multiply; m nonzero.
ModPolynomial powmod(const ModPolynomial& base, u64 e, const ModPolynomial& m);

// Below this modulus root finding sweeps every residue.
inline constexpr u64 kSweepThreshold = u64{1} << 11;

enum class RootStrategy { Auto, Sweep, Frobenius };

// All roots in [0, p), ascending. Throws ZeroModP for the zero polynomial.
std::vector<u64> roots_mod_p(const ModPolynomial& f, RootStrategy strategy = RootStrategy::Auto);

// Existence only; stops at the first root found.
bool has_root_mod_p(const ModPolynomial& f, RootStrategy strategy = RootStrategy::Auto);

// Degrees (with multiplicity, ascending) of the irreducible factors of f.
using FactorisationPattern = std::vector<int>;

FactorisationPattern factorisation_pattern(const ModPolynomial& f);

// Square-free decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i,
// each g_i square-free and monic.
std::vector<std::pair<ModPolynomial, int>> square_free_decomposition(const ModPolynomial& f);

// Distinct-degree factorisation of a monic square-free f: pairs (degree d,
// product of all irreducible factors of degree d).
std::vector<std::pair<int, ModPolynomial>> distinct_degree_factorisation(const ModPolynomial& f);

}  // namespace exceptio
