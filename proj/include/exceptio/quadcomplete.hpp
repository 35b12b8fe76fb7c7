#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

#include "exceptio/arith.hpp"
#include "exceptio/intpoly.hpp"

namespace exceptio {

// a^((p-1)/2) mod p as -1, 0 or 1. Throws EvenOrCompositeP.
int legendre_symbol(const mpz_class& a, u64 p);

// X^2 - disc(h) for a monic cubic h with no integer root and non-square
// discriminant. Throws NotCubic, NonMonic, ReducibleCubic, SquareDiscriminant.
IntPolynomial cubic_resolvent_completion(const IntPolynomial& h);

struct CompletionCandidate {
  u64 d = 0;
  u64 residue_mod_8 = 0;
  std::map<u64, int> qr_certificates;  // odd bad prime -> Legendre symbol of d
};

// Least square-free non-square d in [2, bound] with d = 1 mod 8 and d a
// nonzero square mod every odd bad prime. Throws NoCandidateInRange.
CompletionCandidate find_intersective_d(std::span<const u64> bad_primes, u64 search_bound);

struct CompletionReport {
  FactoredPolynomial completed;
  std::vector<u64> prime_failures;   // primes <= prime_limit without a root
  std::vector<u64> checked_primes;   // primes whose powers were tested
  std::vector<u64> power_failures;   // least failing power of each checked prime
  bool ok() const { return prime_failures.empty() && power_failures.empty(); }
};

struct CompletionOptions {
  // Also test powers of primes dividing the ramified-prime bound of F.
  bool include_ramified = false;
};

// Screens (X^2 - d) * F modulo primes up to prime_limit and modulo prime
// powers up to power_limit for the primes where F has no root.
CompletionReport verify_completion(const FactoredPolynomial& f, const mpz_class& d, u64 prime_limit, u64 power_limit,
                                   const CompletionOptions& options = {});

}  // namespace exceptio
