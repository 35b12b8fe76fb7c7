#pragma once

// Independent reference computations used only by tests.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "exceptio/intpoly.hpp"
#include "exceptio/modpoly.hpp"

namespace oracle {

using exceptio::IntPolynomial;
using exceptio::u64;

// Determinant by fraction-free Bareiss elimination.
inline mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Res(f, g) as the determinant of the Sylvester matrix; both of degree >= 1.
inline mpz_class sylvester_resultant(const IntPolynomial& f, const IntPolynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) s[row][row + i] = f.coeff(m - i);
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) s[n + row][row + i] = g.coeff(n - i);
  }
  return determinant(std::move(s));
}

inline std::vector<u64> brute_roots(const exceptio::ModPolynomial& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.modulus(); ++x) {
    if (f(x) == 0) out.push_back(x);
  }
  return out;
}

// Factor pattern by trial division with every monic polynomial of degree
// 1, 2, ... in turn; only for tiny p and degree.
inline std::vector<int> brute_pattern(exceptio::ModPolynomial f) {
  using exceptio::ModPolynomial;
  const u64 p = f.modulus();
  f = exceptio::make_monic(f);
  std::vector<int> degrees;
  int d = 1;
  while (f.degree() > 0) {
    if (2 * d > f.degree()) {
      degrees.push_back(f.degree());
      break;
    }
    bool divided = false;
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count && !divided; ++idx) {
      std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
      u64 rest = idx;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      c[static_cast<std::size_t>(d)] = 1;
      const ModPolynomial cand(p, c);
      if ((f % cand).is_zero()) {
        degrees.push_back(d);
        f = f / cand;
        divided = true;
      }
    }
    if (!divided) ++d;
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

inline std::vector<u64> trial_division_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n) {
    bool prime = true;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(n);
  }
  return out;
}

// Smallest x in [0, m) with f(x) = 0 mod m, evaluated with big integers.
inline std::optional<u64> brute_root_mod_m(const IntPolynomial& f, u64 m) {
  for (u64 x = 0; x < m; ++x) {
    mpz_class v = f(mpz_class(static_cast<unsigned long>(x)));
    if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m))) return x;
  }
  return std::nullopt;
}

}  // namespace oracle
