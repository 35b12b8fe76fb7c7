#include "exceptio/primescan.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "exceptio/error.hpp"
#include "exceptio/modpoly.hpp"
#include "exceptio/primes.hpp"

namespace exceptio {

namespace {

ModPolynomial reduce_unchecked(const IntPolynomial& f, u64 p) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_u64(a, p));
  return ModPolynomial(p, std::move(c));
}

// f(x) mod m with coefficients already reduced mod m.
u64 eval_mod(const std::vector<u64>& coeffs, u64 x, u64 m) {
  u64 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = addmod(mulmod(acc, x, m), *it, m);
  return acc;
}

std::vector<u64> reduce_coeffs(const IntPolynomial& f, u64 m) {
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_u64(a, m));
  return c;
}

}  // namespace

ScanFragment scan_primes(const FactoredPolynomial& f, std::span<const u64> primes) {
  ScanFragment out;
  for (u64 p : primes) {
    ++out.primes_scanned;
    bool found = false;
    for (const auto& factor : f.factors()) {
      // factors are monic, so the reduction never vanishes
      if (has_root_mod_p(reduce_unchecked(factor, p))) {
        found = true;
        break;
      }
    }
    if (!found) out.failures.push_back(p);
  }
  return out;
}

ScanFragment merge_fragments(std::span<const ScanFragment> fragments) {
  ScanFragment out;
  for (const auto& frag : fragments) {
    out.primes_scanned += frag.primes_scanned;
    out.failures.insert(out.failures.end(), frag.failures.begin(), frag.failures.end());
  }
  return out;
}

ScanReport make_report(const FactoredPolynomial& f, u64 limit, ScanFragment merged) {
  ScanReport r;
  r.poly_key = f.key();
  r.limit = limit;
  r.primes_scanned = merged.primes_scanned;
  r.failures = std::move(merged.failures);
  r.density_estimate = r.primes_scanned == 0 ? Rational(0, 1)
                                             : Rational(r.primes_scanned - r.failures.size(), r.primes_scanned);
  try {
    r.delta = ramified_prime_bound(f);
  } catch (const Error& e) {
    if (e.code() != Errc::NotSquareFree && e.code() != Errc::ZeroResultant) throw;
  }
  return r;
}

ScanFragment scan_primes(const FactoredPolynomial& f, std::span<const u64> primes, const ScanOptions& options) {
  const unsigned threads = std::max(1u, options.threads);
  std::size_t parts = options.partitions == 0 ? threads : options.partitions;
  parts = std::clamp<std::size_t>(parts, 1, std::max<std::size_t>(1, primes.size()));

  std::vector<ScanFragment> fragments(parts);
  auto range = [&](std::size_t i) {
    const std::size_t lo = primes.size() * i / parts;
    const std::size_t hi = primes.size() * (i + 1) / parts;
    return primes.subspan(lo, hi - lo);
  };
  if (threads == 1 || parts == 1) {
    for (std::size_t i = 0; i < parts; ++i) fragments[i] = scan_primes(f, range(i));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < std::min<std::size_t>(threads, parts); ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < parts; i = next++) fragments[i] = scan_primes(f, range(i));
      });
    }
  }
  return merge_fragments(fragments);
}

ScanReport scan(const FactoredPolynomial& f, u64 limit, const ScanOptions& options) {
  if (limit < 2) fail(Errc::BadParameters, "scan limit must be at least 2");
  const PrimeTable table = sieve_primes(limit);
  return make_report(f, limit, scan_primes(f, table.primes, options));
}

Rational empirical_density(const ScanReport& report) {
  if (report.primes_scanned == 0) fail(Errc::BadParameters, "empty scan report");
  return report.density_estimate;
}

Verdict verdict_from_report(const FactoredPolynomial& f, const ScanReport& report) {
  if (auto root = has_integer_root(f)) return HasIntegerRoot{*root};
  const mpz_class delta = report.delta ? *report.delta : ramified_prime_bound(f);
  for (u64 p : report.failures) {
    if (!mpz_divisible_ui_p(delta.get_mpz_t(), p)) return NotExceptional{p};
  }
  return ExceptionalLikely{report.failures};
}

Verdict exceptional_verdict(const FactoredPolynomial& f, u64 limit, const ScanOptions& options) {
  if (auto root = has_integer_root(f)) return HasIntegerRoot{*root};
  return verdict_from_report(f, scan(f, limit, options));
}

std::optional<u64> has_root_mod_m(const IntPolynomial& f, u64 m) {
  if (m < 2) fail(Errc::BadParameters, "modulus must be at least 2");
  if (m > kMaxBruteForceModulus) fail(Errc::ModulusTooLarge, "modulus " + std::to_string(m) + " above brute-force bound");
  if (f.is_zero()) return 0;
  const auto c = reduce_coeffs(f, m);
  for (u64 x = 0; x < m; ++x) {
    if (eval_mod(c, x, m) == 0) return x;
  }
  return std::nullopt;
}

std::optional<u64> smallest_failing_power(const IntPolynomial& f, u64 q, u64 bound) {
  if (!is_prime(q)) fail(Errc::NotPrime, std::to_string(q) + " is not prime");
  if (q > bound) return std::nullopt;
  const ModPolynomial reduced = reduce_unchecked(f, q);
  if (q > bound / q) {
    if (reduced.is_zero() || has_root_mod_p(reduced)) return std::nullopt;
    return q;
  }
  std::vector<u64> roots;
  if (reduced.is_zero()) {
    roots.resize(q);
    std::iota(roots.begin(), roots.end(), u64{0});
  } else {
    roots = roots_mod_p(reduced);
  }
  u64 modulus = q;
  while (!roots.empty() && modulus <= bound / q) {
    const u64 next_modulus = modulus * q;
    const auto c = reduce_coeffs(f, next_modulus);
    std::vector<u64> lifted;
    for (u64 r : roots) {
      for (u64 t = 0; t < q; ++t) {
        const u64 x = r + t * modulus;
        if (eval_mod(c, x, next_modulus) == 0) lifted.push_back(x);
      }
    }
    roots = std::move(lifted);
    modulus = next_modulus;
  }
  if (roots.empty()) return modulus;
  return std::nullopt;
}

std::optional<u64> intersective_screen(const FactoredPolynomial& f, u64 bound) {
  if (bound > kMaxScreenBound) fail(Errc::ModulusTooLarge, "screen bound " + std::to_string(bound) + " above 10^6");
  if (bound < 2) return std::nullopt;
  std::optional<u64> best;
  for (u64 q : sieve_primes(bound).primes) {
    if (best && q >= *best) break;
    const auto m = smallest_failing_power(f.product(), q, best ? std::min(bound, *best - 1) : bound);
    if (m) best = m;
  }
  return best;
}

}  // namespace exceptio
