#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exceptio/arith.hpp"

namespace exceptio {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

// Polynomial with arbitrary-precision integer coefficients, stored in
// ascending degree order without leading zeros. The zero polynomial has no
// stored coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int degree);
  // X - a
  static IntPolynomial linear_root(const mpz_class& a);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of X^i; zero beyond the degree.
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  mpz_class operator()(const mpz_class& x) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

IntPolynomial make_poly(std::span<const mpz_class> coeffs);
IntPolynomial make_poly(std::initializer_list<long> coeffs);

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);

IntPolynomial derivative(const IntPolynomial& f);

// gcd of the coefficients, non-negative.
mpz_class content(const IntPolynomial& f);
// f / content(f) with a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);

// R with lc(b)^(deg a - deg b + 1) a = q b + R; deg a >= deg b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient by an integer that divides every coefficient.
IntPolynomial divide_exact(const IntPolynomial& f, const mpz_class& c);

// Res(f, g) by the fraction-free subresultant remainder sequence.
mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);

// Primitive gcd over Q (positive leading coefficient), from the same
// subresultant sequence.
IntPolynomial gcd_over_Q(const IntPolynomial& f, const IntPolynomial& g);

// (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 1.
mpz_class discriminant(const IntPolynomial& f);

bool is_square_free_over_Q(const IntPolynomial& f);

// An integer root of f, preferring small absolute values and positive sign.
std::optional<mpz_class> has_integer_root(const IntPolynomial& f);

// Canonical text in the variable x, descending powers, e.g. "x^4-5x^2+6".
std::string to_string(const IntPolynomial& f);

// Parses one polynomial in x, e.g. "x^3 + 2", "2*x^2-x+1". No semicolons.
IntPolynomial parse_poly(std::string_view text);

// Monic factors f_1, ..., f_k with their cached product.
class FactoredPolynomial {
 public:
  const std::vector<IntPolynomial>& factors() const { return factors_; }
  const IntPolynomial& product() const { return product_; }
  // Canonical text: factors joined by "; ".
  std::string key() const;

  friend bool operator==(const FactoredPolynomial&, const FactoredPolynomial&) = default;

 private:
  friend FactoredPolynomial product_of(std::vector<IntPolynomial> factors);
  std::vector<IntPolynomial> factors_;
  IntPolynomial product_;
};

// Throws ZeroFactor for a zero factor, NonMonic for a non-monic or constant one.
FactoredPolynomial product_of(std::vector<IntPolynomial> factors);

// Parses "x^2-2; x^2-3; x^2-6" into monic factors.
FactoredPolynomial parse_factored(std::string_view text);

std::optional<mpz_class> has_integer_root(const FactoredPolynomial& f);

// prod |disc(f_i)| * prod_{i<j} |Res(f_i, f_j)|. Every prime at which the
// product is inseparable divides it.
mpz_class ramified_prime_bound(const FactoredPolynomial& f);

}  // namespace exceptio
