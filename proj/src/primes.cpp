#include "exceptio/primes.hpp"

#include <algorithm>
#include <cmath>

#include "exceptio/error.hpp"

namespace exceptio {

PrimeTable sieve_primes(u64 limit, u64 cap) {
  if (limit > cap) {
    fail(Errc::LimitTooLarge, "sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
  }
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;
  table.primes.push_back(2);

  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;

  // odd base primes up to sqrt(limit)
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 3; i <= root; i += 2) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += 2 * i) small[j] = 0;
  }

  // Segment k covers the odd numbers low, low + 2, ..., one byte each.
  constexpr u64 kSegment = 1 << 16;
  std::vector<char> seg(kSegment);
  std::vector<u64> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next[i] = base[i] * base[i];
  for (u64 low = 3; low <= limit; low += 2 * kSegment) {
    const u64 high = std::min(limit, low + 2 * kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const u64 q = base[i];
      if (q * q > high) break;
      u64 j = next[i];
      for (; j <= high; j += 2 * q) seg[(j - low) / 2] = 0;
      next[i] = j;
    }
    for (u64 n = low; n <= high; n += 2) {
      if (seg[(n - low) / 2]) table.primes.push_back(n);
    }
  }
  return table;
}

}  // namespace exceptio
