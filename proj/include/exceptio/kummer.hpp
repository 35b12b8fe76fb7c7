#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "exceptio/arith.hpp"
#include "exceptio/intpoly.hpp"

namespace exceptio {

// Throws EmptySet, NotPrime, or BadParameters unless ascending distinct primes.
void validate_prime_set(std::span<const u64> primes);

// Products of all nonempty runs of consecutive entries, ascending.
std::vector<mpz_class> consecutive_products(std::span<const u64> primes);

class RadicandSet {
 public:
  // Throws NotPrime for p and InvalidRadicand unless each b is square-free and > 1.
  RadicandSet(u64 p, std::vector<mpz_class> radicands);

  u64 p() const { return p_; }
  const std::vector<mpz_class>& radicands() const { return radicands_; }  // ascending, distinct
  const std::vector<u64>& support() const { return support_; }            // ascending
  // Indices into support() of the primes dividing radicands()[i].
  const std::vector<std::vector<std::size_t>>& divisor_indices() const { return divisor_indices_; }

 private:
  u64 p_;
  std::vector<mpz_class> radicands_;
  std::vector<u64> support_;
  std::vector<std::vector<std::size_t>> divisor_indices_;
};

RadicandSet radicands_from_primes(u64 p, std::span<const u64> primes);

// Product of X^p - b over the radicands, ascending in b.
FactoredPolynomial build_kummer_poly(const RadicandSet& b);

// An automorphism sends l^(1/p) to zeta^values[l] l^(1/p) and zeta to zeta^zeta_value.
struct NuMap {
  std::map<u64, u64> values;
  u64 zeta_value = 1;
  friend bool operator==(const NuMap&, const NuMap&) = default;
};

// Throws SupportMismatch when a support prime has no value.
bool nu_fixes_some_root(const NuMap& nu, const RadicandSet& b);

inline constexpr std::size_t kMaxKummerSupport = 12;
inline constexpr u64 kMaxKummerMaps = 10'000'000;

enum class Enumeration { Reduced, Full };

struct ExactResult {
  bool exceptional = false;
  std::optional<NuMap> witness;  // lex-smallest map fixing no root
  friend bool operator==(const ExactResult&, const ExactResult&) = default;
};

// Throws EnumerationTooLarge.
ExactResult is_exceptional_exact(const RadicandSet& b, Enumeration mode = Enumeration::Reduced);
std::optional<NuMap> non_fixing_witness(const RadicandSet& b);

inline bool theorem_verdict(std::size_t prime_count, u64 p) { return prime_count >= p; }

// Lex-earliest 1-based interval [i, j] of consecutive terms summing to zero in
// Z/m_1 x ... x Z/m_k. Each element has one residue per modulus.
std::optional<std::pair<std::size_t, std::size_t>> zero_sum_consecutive(std::span<const std::vector<u64>> seq,
                                                                        std::span<const u64> moduli);

}  // namespace exceptio
