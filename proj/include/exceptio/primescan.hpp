#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "exceptio/arith.hpp"
#include "exceptio/intpoly.hpp"

namespace exceptio {

struct ScanOptions {
  unsigned threads = 1;
  // Number of contiguous prime ranges; 0 means one per thread.
  std::size_t partitions = 0;
};

// Root-existence results for one contiguous run of primes.
struct ScanFragment {
  u64 primes_scanned = 0;
  std::vector<u64> failures;
};

struct ScanReport {
  std::string poly_key;
  u64 limit = 0;
  u64 primes_scanned = 0;
  std::vector<u64> failures;  // primes <= limit where no factor has a root
  Rational density_estimate;
  std::optional<mpz_class> delta;  // absent when the factors are not square-free and coprime

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Scans the given ascending primes. Each factor is tested separately and the
// first one with a root ends the test for that prime.
ScanFragment scan_primes(const FactoredPolynomial& f, std::span<const u64> primes);

// Splits the primes into contiguous partitions, scans them on worker threads
// and merges in order; the result does not depend on the partitioning.
ScanFragment scan_primes(const FactoredPolynomial& f, std::span<const u64> primes, const ScanOptions& options);

// Concatenates fragments produced for consecutive prime ranges, in order.
ScanFragment merge_fragments(std::span<const ScanFragment> fragments);

// Builds the report fields (density, delta) around a merged fragment.
ScanReport make_report(const FactoredPolynomial& f, u64 limit, ScanFragment merged);

ScanReport scan(const FactoredPolynomial& f, u64 limit, const ScanOptions& options = {});

Rational empirical_density(const ScanReport& report);

struct HasIntegerRoot {
  mpz_class root;
  friend bool operator==(const HasIntegerRoot&, const HasIntegerRoot&) = default;
};
// Rigorous: an unramified prime without roots has a fixed-point-free Frobenius.
struct NotExceptional {
  u64 witness;
  friend bool operator==(const NotExceptional&, const NotExceptional&) = default;
};
// Heuristic: every failure up to the limit divides the ramified-prime bound.
struct ExceptionalLikely {
  std::vector<u64> failures;
  friend bool operator==(const ExceptionalLikely&, const ExceptionalLikely&) = default;
};

using Verdict = std::variant<HasIntegerRoot, NotExceptional, ExceptionalLikely>;

// Throws NotSquareFree / ZeroResultant when the report has no delta.
Verdict verdict_from_report(const FactoredPolynomial& f, const ScanReport& report);

Verdict exceptional_verdict(const FactoredPolynomial& f, u64 limit, const ScanOptions& options = {});

inline constexpr u64 kMaxBruteForceModulus = 100'000'000;

// Smallest x in [0, m) with f(x) = 0 mod m, by exhaustive evaluation.
std::optional<u64> has_root_mod_m(const IntPolynomial& f, u64 m);

// Least power of the prime q up to bound modulo which f has no root, found by
// lifting the roots mod q^(k-1) to q^k.
std::optional<u64> smallest_failing_power(const IntPolynomial& f, u64 q, u64 bound);

inline constexpr u64 kMaxScreenBound = 1'000'000;

// Smallest m in [2, bound] such that the product has no root mod m. Such an m
// is always a prime power, so only prime powers are tested.
std::optional<u64> intersective_screen(const FactoredPolynomial& f, u64 bound);

}  // namespace exceptio
