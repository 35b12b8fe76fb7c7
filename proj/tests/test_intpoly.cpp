#include <random>

#include "doctest.h"
#include "exceptio/error.hpp"
#include "exceptio/intpoly.hpp"
#include "exceptio/modpoly.hpp"
#include "oracles.hpp"

using namespace exceptio;

namespace {

IntPolynomial P(std::initializer_list<long> c) { return make_poly(c); }

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exceptio::Error");
  return Errc::ParseError;
}

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound, bool monic) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  const int d = deg(rng);
  std::vector<mpz_class> c;
  for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
  long lead = monic ? 1 : coef(rng);
  while (lead == 0) lead = coef(rng);
  c.emplace_back(lead);
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("make_poly canonical form") {
  CHECK(to_string(P({-2, 0, 1})) == "x^2-2");
  CHECK(P({-2, 0, 1}).degree() == 2);
  CHECK(P({0}).is_zero());
  CHECK(P({0}).degree() == kZeroDegree);
  CHECK(to_string(P({2, 0, 0, 1})) == "x^3+2");
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(error_code([] { make_poly(std::span<const mpz_class>{}); }) == Errc::EmptyCoefficients);
}

TEST_CASE("product_of") {
  const auto f = product_of({P({-2, 0, 1}), P({-3, 0, 1})});
  CHECK(f.product() == P({6, 0, -5, 0, 1}));
  CHECK(product_of({P({2, 0, 0, 1})}).product() == P({2, 0, 0, 1}));
  CHECK(product_of({P({-1, 1}), P({1, 1})}).product() == P({-1, 0, 1}));
  CHECK(error_code([] { product_of({P({-1, 1}), IntPolynomial()}); }) == Errc::ZeroFactor);
  CHECK(error_code([] { product_of({P({-1, 2})}); }) == Errc::NonMonic);
  CHECK(f.key() == "x^2-2; x^2-3");
}

TEST_CASE("has_integer_root") {
  CHECK(has_integer_root(P({-4, 0, 1})) == mpz_class(2));
  CHECK_FALSE(has_integer_root(P({2, 0, 0, 1})).has_value());
  CHECK(has_integer_root(P({0, 0, 0, 0, 0, 1})) == mpz_class(0));
  // non-monic: 2x^2 - 3x - 2 = (2x + 1)(x - 2)
  CHECK(has_integer_root(P({-2, -3, 2})) == mpz_class(2));
  // 2x - 1 has only the rational root 1/2
  CHECK_FALSE(has_integer_root(P({-1, 2})).has_value());
  CHECK(has_integer_root(P({6, 5, 1})) == mpz_class(-2));
  CHECK(has_integer_root(parse_factored("x-1; x^2+1")) == mpz_class(1));
}

TEST_CASE("reduce_mod") {
  CHECK(reduce_mod(P({108, 0, 1}), 2).coeffs() == std::vector<u64>{0, 0, 1});
  CHECK(reduce_mod(P({-2, 0, 1}), 7).coeffs() == std::vector<u64>{5, 0, 1});
  CHECK(reduce_mod(P({2, 0, 0, 1}), 2).coeffs() == std::vector<u64>{0, 0, 0, 1});
  CHECK(error_code([] { reduce_mod(P({1, 1}), 9); }) == Errc::NotPrime);
}

TEST_CASE("roots_mod_p examples") {
  const auto f = reduce_mod(P({-2, 0, 1}), 7);
  CHECK(roots_mod_p(f) == oracle::brute_roots(f));
  CHECK(roots_mod_p(f) == std::vector<u64>{3, 4});
  CHECK(roots_mod_p(reduce_mod(P({-1, 1}), 5)) == std::vector<u64>{1});
  CHECK(roots_mod_p(reduce_mod(P({1, 0, 1}), 3)).empty());
  for (auto s : {RootStrategy::Sweep, RootStrategy::Frobenius}) {
    CHECK(roots_mod_p(f, s) == std::vector<u64>{3, 4});
    CHECK(roots_mod_p(reduce_mod(P({1, 0, 1}), 3), s).empty());
  }
  CHECK(error_code([] { roots_mod_p(reduce_mod(P({5, 5}), 5)); }) == Errc::ZeroModP);
}

TEST_CASE("roots above the sweep threshold") {
  // 2 is a quadratic residue mod primes = +-1 mod 8
  const u64 p = 1000000007;  // 7 mod 8
  const auto roots = roots_mod_p(reduce_mod(P({-2, 0, 1}), p));
  REQUIRE(roots.size() == 2);
  CHECK(mulmod(roots[0], roots[0], p) == 2);
  CHECK(roots[0] + roots[1] == p);
  const u64 big = 18446744073709551557ULL;  // largest 64-bit prime
  const auto lin = roots_mod_p(reduce_mod(P({-12345, 1}), big));
  CHECK(lin == std::vector<u64>{12345});
}

TEST_CASE("factorisation_pattern examples") {
  CHECK(factorisation_pattern(reduce_mod(P({2, 0, 0, 1}), 5)) == FactorisationPattern{1, 2});
  CHECK(factorisation_pattern(reduce_mod(P({-2, 0, 1}), 7)) == FactorisationPattern{1, 1});
  CHECK(factorisation_pattern(reduce_mod(P({-2, 0, 1}), 5)) == FactorisationPattern{2});
  // inseparable reductions keep multiplicities
  CHECK(factorisation_pattern(reduce_mod(P({2, 0, 0, 1}), 2)) == FactorisationPattern{1, 1, 1});
  CHECK(factorisation_pattern(reduce_mod(P({2, 0, 0, 1}), 3)) == FactorisationPattern{1, 1, 1});
  CHECK(factorisation_pattern(reduce_mod(P({1, 0, 2, 0, 1}), 3)) == FactorisationPattern{2, 2});
  CHECK(error_code([] { factorisation_pattern(reduce_mod(P({3, 3}), 3)); }) == Errc::ZeroModP);
}

TEST_CASE("factorisation_pattern agrees with trial division") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto f = random_poly(rng, 6, 9, false);
    for (u64 p : {2, 3, 5, 7}) {
      const auto m = reduce_mod(f, p);
      if (m.degree() < 1) continue;
      CHECK(factorisation_pattern(m) == oracle::brute_pattern(m));
    }
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P({-2, 1}), P({-3, 0, 1})) == 1);
  CHECK(resultant(P({-2, 0, 1}), P({3})) == 9);
  CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
  CHECK(resultant(P({-2, 0, 1}), P({-6, 0, 1})) == 16);
  CHECK(resultant(P({108, 0, 1}), P({2, 0, 0, 1})) == 1259716);
  CHECK(resultant(P({-1, 1}), P({-1, 0, 1})) == 0);
  CHECK(error_code([] { resultant(IntPolynomial(), P({1, 1})); }) == Errc::ZeroPolynomial);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 400; ++iter) {
    const auto f = random_poly(rng, 7, 20, false);
    const auto g = random_poly(rng, 7, 20, false);
    CHECK(resultant(f, g) == oracle::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const auto f = random_poly(rng, 5, 9, false);
    const auto g = random_poly(rng, 5, 9, false);
    const auto h = random_poly(rng, 5, 9, false);
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P({2, 0, 0, 1})) == -108);
  CHECK(discriminant(P({-2, 0, 1})) == 8);
  CHECK(discriminant(P({108, 0, 1})) == -432);
  CHECK(discriminant(P({5, 1})) == 1);
  CHECK(error_code([] { discriminant(P({1, 0, 2})); }) == Errc::NonMonic);
  CHECK(error_code([] { discriminant(P({1})); }) == Errc::DegreeZero);
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      CHECK(discriminant(P({b, a, 0, 1})) == -4 * a * a * a - 27 * b * b);
    }
  }
}

TEST_CASE("square-freeness over Q") {
  CHECK_FALSE(is_square_free_over_Q(P({1, -2, 1})));
  CHECK(is_square_free_over_Q(P({-2, 0, 1})));
  CHECK(is_square_free_over_Q(parse_factored("x^2-2; x^2-3; x^2-6").product()));
  CHECK_FALSE(is_square_free_over_Q(parse_factored("x^2-2; x^2-2").product()));
  CHECK(gcd_over_Q(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
}

TEST_CASE("ramified_prime_bound") {
  auto sylvester_bound = [](const FactoredPolynomial& F) {
    mpz_class out = 1;
    const auto& fs = F.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].degree() > 1) out *= abs(oracle::sylvester_resultant(fs[i], derivative(fs[i])));
      for (std::size_t j = i + 1; j < fs.size(); ++j) out *= abs(oracle::sylvester_resultant(fs[i], fs[j]));
    }
    return out;
  };
  const auto sextic = parse_factored("x^2-2; x^2-3; x^2-6");
  CHECK(ramified_prime_bound(sextic) == sylvester_bound(sextic));
  CHECK(ramified_prime_bound(sextic) == 331776);
  const auto quintic = parse_factored("x^2+108; x^3+2");
  CHECK(ramified_prime_bound(quintic) == sylvester_bound(quintic));
  CHECK(ramified_prime_bound(quintic) == mpz_class("58773309696"));
  CHECK(ramified_prime_bound(parse_factored("x-7")) == 1);
  CHECK(error_code([] { ramified_prime_bound(parse_factored("x^2-2x+1")); }) == Errc::NotSquareFree);
  CHECK(error_code([] { ramified_prime_bound(parse_factored("x-1; x^2-1")); }) == Errc::ZeroResultant);
}

TEST_CASE("parser") {
  CHECK(parse_poly(" x^3 + 2 ") == P({2, 0, 0, 1}));
  CHECK(parse_poly("2*x^2-x+1") == P({1, -1, 2}));
  CHECK(parse_poly("-x") == P({0, -1}));
  CHECK(parse_poly("x^2+3x^2") == P({0, 0, 4}));
  CHECK(parse_factored("x^2-2; x^2-3; x^2-6").factors().size() == 3);
  CHECK(error_code([] { parse_poly("1.5x"); }) == Errc::NonIntegerCoefficient);
  CHECK(error_code([] { parse_poly("x^2/2"); }) == Errc::NonIntegerCoefficient);
  CHECK(error_code([] { parse_poly("x^"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_poly("x y"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_factored("2x^2-1"); }) == Errc::NonMonic);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_poly(rng, 8, 1000, false);
    CHECK(parse_poly(to_string(f)) == f);
  }
}

TEST_CASE("sweep and Frobenius root strategies agree") {
  std::mt19937_64 rng(7);
  std::vector<IntPolynomial> polys;
  for (int i = 0; i < 200; ++i) polys.push_back(random_poly(rng, 8, 50, false));
  for (u64 p : oracle::trial_division_primes(10000)) {
    for (const auto& f : polys) {
      const auto m = reduce_mod(f, p);
      if (m.is_zero()) continue;
      const auto swept = roots_mod_p(m, RootStrategy::Sweep);
      REQUIRE(swept == roots_mod_p(m, RootStrategy::Frobenius));
      REQUIRE(has_root_mod_p(m, RootStrategy::Frobenius) == !swept.empty());
    }
  }
}

TEST_CASE("pattern invariants") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 150; ++iter) {
    const auto f = random_poly(rng, 8, 30, false);
    for (u64 p : {2, 3, 5, 7, 11, 13, 101, 65537, 1000003}) {
      const auto m = reduce_mod(f, p);
      if (m.degree() < 1) continue;
      const auto pattern = factorisation_pattern(m);
      int sum = 0;
      for (int d : pattern) sum += d;
      CHECK(sum == m.degree());
      const bool separable = gcd(m, derivative(m)).degree() == 0;
      if (separable) {
        const auto ones = std::count(pattern.begin(), pattern.end(), 1);
        CHECK(static_cast<std::size_t>(ones) == roots_mod_p(m).size());
      }
    }
  }
}

TEST_CASE("every inseparable prime divides the bound") {
  std::mt19937_64 rng(13);
  const auto primes = oracle::trial_division_primes(1000);
  int built = 0;
  while (built < 100) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<IntPolynomial> fs;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) fs.push_back(random_poly(rng, 3, 5, true));
    const auto F = product_of(fs);
    if (!is_square_free_over_Q(F.product())) continue;
    ++built;
    const mpz_class delta = ramified_prime_bound(F);
    for (u64 p : primes) {
      const auto m = reduce_mod(F.product(), p);
      if (gcd(m, derivative(m)).degree() > 0) {
        CHECK(mpz_divisible_ui_p(delta.get_mpz_t(), p));
      }
    }
  }
}
