#pragma once

#include <cstdint>
#include <vector>

#include "exceptio/arith.hpp"

namespace exceptio {

inline constexpr u64 kDefaultSieveCap = 1'000'000'000;

struct PrimeTable {
  u64 limit = 0;
  std::vector<u64> primes;  // all primes <= limit, ascending
};

// Segmented sieve of Eratosthenes. Throws LimitTooLarge above `cap`.
PrimeTable sieve_primes(u64 limit, u64 cap = kDefaultSieveCap);

}  // namespace exceptio
