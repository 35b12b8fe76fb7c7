#include <random>

#include "doctest.h"
#include "exceptio/error.hpp"
#include "exceptio/permgroup.hpp"
#include "exceptio/primes.hpp"
#include "exceptio/primescan.hpp"
#include "exceptio/quadcomplete.hpp"
#include "oracles.hpp"

using namespace exceptio;

namespace {

const char* kSextic = "x^2-2; x^2-3; x^2-6";

// Squares mod p by listing them.
int brute_legendre(long a, long p) {
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

}  // namespace

TEST_CASE("legendre_symbol") {
  CHECK(legendre_symbol(2, 7) == 1);
  CHECK(legendre_symbol(7 * 12, 7) == 0);
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(-1, 5) == 1);
  CHECK(legendre_symbol(-1, 7) == -1);
  for (long p : {3, 5, 7, 11, 13, 97, 101}) {
    for (long a = -50; a <= 50; ++a) CHECK(legendre_symbol(a, static_cast<u64>(p)) == brute_legendre(a, p));
  }
  CHECK_THROWS_AS(legendre_symbol(3, 2), Error);
  CHECK_THROWS_AS(legendre_symbol(3, 9), Error);
}

TEST_CASE("cubic_resolvent_completion") {
  CHECK(to_string(cubic_resolvent_completion(parse_poly("x^3+2"))) == "x^2+108");
  CHECK(to_string(cubic_resolvent_completion(parse_poly("x^3-x-1"))) == "x^2+23");
  CHECK_THROWS_AS(cubic_resolvent_completion(parse_poly("x^3-3x-1")), Error);
  CHECK_THROWS_AS(cubic_resolvent_completion(parse_poly("x^2+1")), Error);
  CHECK_THROWS_AS(cubic_resolvent_completion(parse_poly("x^3-1")), Error);
  CHECK_THROWS_AS(cubic_resolvent_completion(parse_poly("2x^3+1")), Error);
  try {
    cubic_resolvent_completion(parse_poly("x^3-3x-1"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SquareDiscriminant);
  }
}

TEST_CASE("resolvent completions look exceptional") {
  std::mt19937_64 rng(3);
  int tried = 0;
  while (tried < 20) {
    const long a = static_cast<long>(rng() % 11) - 5;
    const long b = static_cast<long>(rng() % 11) - 5;
    const long c = static_cast<long>(rng() % 21) - 10;
    const auto h = make_poly({c, b, a, 1});
    if (has_integer_root(h)) continue;
    const mpz_class disc = discriminant(h);
    if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) continue;
    ++tried;
    const auto g = cubic_resolvent_completion(h);
    const auto v = exceptional_verdict(product_of({g, h}), 10000);
    CHECK_MESSAGE(std::holds_alternative<ExceptionalLikely>(v), to_string(h));
  }
}

TEST_CASE("S3 shadow of the resolvent completion") {
  const auto s3 = generate_group({parse_cycles(3, "(0 1 2)"), parse_cycles(3, "(1 2)")});
  CHECK(unique_fp_coset_condition(s3, translation_subgroup(s3)).verdict);
  CHECK(admits_quadratic_completion(s3) == translation_subgroup(s3));
}

TEST_CASE("find_intersective_d") {
  CHECK(find_intersective_d({}, 100).d == 17);
  CHECK(find_intersective_d(std::vector<u64>{5}, 100).d == 41);
  CHECK(find_intersective_d(std::vector<u64>{3}, 100).d == 73);
  CHECK(find_intersective_d(std::vector<u64>{2, 3}, 100).d == 73);
  CHECK_THROWS_AS(find_intersective_d(std::vector<u64>{3}, 72), Error);
  CHECK_THROWS_AS(find_intersective_d(std::vector<u64>{4}, 100), Error);
  // the three predicates, by exhaustive scan
  const auto odd = sieve_primes(40).primes;
  for (std::size_t mask = 0; mask < 64; ++mask) {
    std::vector<u64> bad;
    for (std::size_t i = 0; i < 6; ++i) {
      if ((mask >> i) & 1) bad.push_back(odd[i + 1]);
    }
    const auto c = find_intersective_d(bad, 10'000'000);
    CHECK(c.residue_mod_8 == 1);
    CHECK(is_square_free(mpz_class(static_cast<unsigned long>(c.d))));
    for (u64 p : bad) {
      CHECK(c.qr_certificates.at(p) == 1);
      CHECK(c.d % p != 0);
    }
    for (u64 e = 2; e < c.d; ++e) {
      bool admissible = e % 8 == 1 && is_square_free(mpz_class(static_cast<unsigned long>(e)));
      for (u64 p : bad) admissible = admissible && brute_legendre(static_cast<long>(e), static_cast<long>(p)) == 1;
      CHECK_FALSE(admissible);
    }
  }
}

TEST_CASE("verify_completion") {
  const auto sextic = parse_factored(kSextic);
  const auto d = find_intersective_d(scan(sextic, 10000).failures, 1000).d;
  CHECK(d == 17);
  const auto r = verify_completion(sextic, d, 10000, 10000);
  CHECK(r.ok());
  CHECK(r.checked_primes.empty());

  const auto bad = verify_completion(parse_factored("x^2-2"), 41, 100, 100);
  CHECK_FALSE(bad.prime_failures.empty());
  CHECK_FALSE(bad.ok());

  CHECK(verify_completion(parse_factored("x-1; x^2+5"), 5, 1000, 1000).ok());
}

TEST_CASE("ramified primes need the completion too") {
  const auto sextic = parse_factored(kSextic);
  const auto r17 = verify_completion(sextic, 17, 10000, 10000, {true});
  CHECK(r17.checked_primes == std::vector<u64>{2, 3});
  CHECK(r17.power_failures == std::vector<u64>{27});
  CHECK_FALSE(oracle::brute_root_mod_m(r17.completed.product(), 27).has_value());

  const auto d = find_intersective_d(std::vector<u64>{2, 3}, 1000).d;
  CHECK(d == 73);
  CHECK(verify_completion(sextic, d, 10000, 10000, {true}).ok());
  const auto completed = parse_factored("x^2-73; x^2-2; x^2-3; x^2-6");
  CHECK_FALSE(intersective_screen(completed, 100000).has_value());
  for (u64 m = 2; m <= 3000; ++m) CHECK(oracle::brute_root_mod_m(completed.product(), m).has_value());
}

TEST_CASE("smallest_failing_power matches brute force") {
  for (const char* text : {"x^2+1", "x^2-2; x^2-3; x^2-6", "x^2+108; x^3+2", "x^2-17; x^3+2", "x^2+3"}) {
    const auto f = parse_factored(text).product();
    for (u64 q : {2u, 3u, 5u, 7u}) {
      std::optional<u64> brute;
      for (u64 m = q; m <= 2000 && !brute; m *= q) {
        if (!oracle::brute_root_mod_m(f, m)) brute = m;
      }
      CHECK(smallest_failing_power(f, q, 2000) == brute);
    }
  }
}
