#include "exceptio/quadcomplete.hpp"

#include <algorithm>

#include "exceptio/error.hpp"
#include "exceptio/primescan.hpp"

namespace exceptio {

int legendre_symbol(const mpz_class& a, u64 p) {
  if (p == 2 || !is_prime(p)) fail(Errc::EvenOrCompositeP, std::to_string(p) + " is not an odd prime");
  const u64 r = powmod(mod_u64(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

IntPolynomial cubic_resolvent_completion(const IntPolynomial& h) {
  if (h.degree() != 3) fail(Errc::NotCubic, to_string(h) + " is not a cubic");
  if (!h.is_monic()) fail(Errc::NonMonic, to_string(h) + " is not monic");
  if (has_integer_root(h)) fail(Errc::ReducibleCubic, to_string(h) + " has an integer root");
  const mpz_class disc = discriminant(h);
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
    fail(Errc::SquareDiscriminant, "discriminant " + disc.get_str() + " is a square");
  }
  return IntPolynomial::monomial(1, 2) - IntPolynomial::constant(disc);
}

CompletionCandidate find_intersective_d(std::span<const u64> bad_primes, u64 search_bound) {
  if (search_bound < 2) fail(Errc::BadParameters, "search bound must be at least 2");
  std::vector<u64> odd;
  for (u64 p : bad_primes) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (p != 2) odd.push_back(p);
  }
  std::sort(odd.begin(), odd.end());
  odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
  for (u64 d = 9; d <= search_bound; d += 8) {
    const mpz_class dz(static_cast<unsigned long>(d));
    if (mpz_perfect_square_p(dz.get_mpz_t()) || !is_square_free(dz)) continue;
    CompletionCandidate c{d, d % 8, {}};
    bool all_residues = true;
    for (u64 p : odd) {
      const int s = legendre_symbol(dz, p);
      c.qr_certificates[p] = s;
      all_residues = all_residues && s == 1;
    }
    if (all_residues) return c;
  }
  fail(Errc::NoCandidateInRange, "no admissible d up to " + std::to_string(search_bound));
}

CompletionReport verify_completion(const FactoredPolynomial& f, const mpz_class& d, u64 prime_limit, u64 power_limit,
                                   const CompletionOptions& options) {
  std::vector<IntPolynomial> factors{IntPolynomial::monomial(1, 2) - IntPolynomial::constant(d)};
  factors.insert(factors.end(), f.factors().begin(), f.factors().end());
  CompletionReport report{product_of(std::move(factors)), {}, {}, {}};
  if (prime_limit < 2) return report;
  report.prime_failures = scan(report.completed, prime_limit).failures;
  std::vector<u64> check = scan(f, prime_limit).failures;
  if (options.include_ramified) {
    try {
      for (const auto& q : prime_divisors(ramified_prime_bound(f))) {
        if (q <= prime_limit) check.push_back(q.get_ui());
      }
    } catch (const Error&) {
    }
  }
  std::sort(check.begin(), check.end());
  check.erase(std::unique(check.begin(), check.end()), check.end());
  report.checked_primes = check;
  const IntPolynomial product = report.completed.product();
  for (u64 q : check) {
    if (const auto m = smallest_failing_power(product, q, power_limit)) report.power_failures.push_back(*m);
  }
  return report;
}

}  // namespace exceptio
