#include "exceptio/kummer.hpp"

#include <algorithm>

#include "exceptio/error.hpp"

namespace exceptio {

namespace {

std::string list_string(std::span<const u64> xs) {
  std::string out;
  for (u64 x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

u64 checked_power(u64 base, std::size_t exp, u64 bound) {
  u64 r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > bound / base) return bound + 1;
    r *= base;
  }
  return r;
}

// The radicand sum of nu over each radicand, mod p.
bool some_sum_vanishes(const RadicandSet& b, const std::vector<u64>& nu) {
  for (const auto& idx : b.divisor_indices()) {
    u64 s = 0;
    for (std::size_t i : idx) s = addmod(s, nu[i], b.p());
    if (s == 0) return true;
  }
  return false;
}

NuMap to_map(const RadicandSet& b, const std::vector<u64>& nu, u64 zeta) {
  NuMap m;
  for (std::size_t i = 0; i < nu.size(); ++i) m.values[b.support()[i]] = nu[i];
  m.zeta_value = zeta;
  return m;
}

// Depth-first over nu in lex order; a radicand is checked as soon as its last
// prime is assigned, and a vanishing sum discards the whole subtree.
std::optional<std::vector<u64>> reduced_search(const RadicandSet& b) {
  const std::size_t n = b.support().size();
  std::vector<std::vector<std::size_t>> closing(n);
  for (std::size_t r = 0; r < b.divisor_indices().size(); ++r) closing[b.divisor_indices()[r].back()].push_back(r);
  std::vector<u64> nu(n, 0);
  const u64 p = b.p();
  auto fixes_at = [&](std::size_t depth) {
    for (std::size_t r : closing[depth]) {
      u64 s = 0;
      for (std::size_t i : b.divisor_indices()[r]) s = addmod(s, nu[i], p);
      if (s == 0) return true;
    }
    return false;
  };
  std::size_t depth = 0;
  if (n == 0) return nu;
  for (;;) {
    if (!fixes_at(depth)) {
      if (depth + 1 == n) return nu;
      ++depth;
      nu[depth] = 0;
      continue;
    }
    while (++nu[depth] == p) {
      if (depth == 0) return std::nullopt;
      --depth;
    }
  }
}

// Literal test over every nu_0 in Z/p, with no use of the zeta_value = 1 reduction.
bool fixes_literal(const RadicandSet& b, const std::vector<u64>& nu, u64 zeta) {
  const u64 p = b.p();
  for (const auto& idx : b.divisor_indices()) {
    u64 s = 0;
    for (std::size_t i : idx) s = addmod(s, nu[i], p);
    for (u64 nu0 = 0; nu0 < p; ++nu0) {
      if (addmod(mulmod(nu0, submod(zeta, 1, p), p), s, p) == 0) return true;
    }
  }
  return false;
}

}  // namespace

void validate_prime_set(std::span<const u64> primes) {
  if (primes.empty()) fail(Errc::EmptySet, "prime set is empty");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) fail(Errc::NotPrime, std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i] <= primes[i - 1]) fail(Errc::BadParameters, "primes must be strictly increasing: " + list_string(primes));
  }
}

std::vector<mpz_class> consecutive_products(std::span<const u64> primes) {
  validate_prime_set(primes);
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    mpz_class prod = 1;
    for (std::size_t j = i; j < primes.size(); ++j) {
      prod *= static_cast<unsigned long>(primes[j]);
      out.push_back(prod);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RadicandSet::RadicandSet(u64 p, std::vector<mpz_class> radicands) : p_(p), radicands_(std::move(radicands)) {
  if (!is_prime(p)) fail(Errc::NotPrime, "exponent " + std::to_string(p) + " is not prime");
  if (radicands_.empty()) fail(Errc::EmptySet, "radicand set is empty");
  std::sort(radicands_.begin(), radicands_.end());
  radicands_.erase(std::unique(radicands_.begin(), radicands_.end()), radicands_.end());
  std::vector<std::vector<u64>> divisors;
  for (const auto& b : radicands_) {
    if (b <= 1 || !is_square_free(b)) fail(Errc::InvalidRadicand, "radicand " + b.get_str() + " is not a square-free integer > 1");
    std::vector<u64> ps;
    for (const auto& q : prime_divisors(b)) {
      if (!q.fits_ulong_p()) fail(Errc::InvalidRadicand, "radicand " + b.get_str() + " has a prime factor above 64 bits");
      ps.push_back(q.get_ui());
    }
    support_.insert(support_.end(), ps.begin(), ps.end());
    divisors.push_back(std::move(ps));
  }
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  for (const auto& ps : divisors) {
    std::vector<std::size_t> idx;
    for (u64 q : ps) idx.push_back(static_cast<std::size_t>(std::lower_bound(support_.begin(), support_.end(), q) - support_.begin()));
    std::sort(idx.begin(), idx.end());
    divisor_indices_.push_back(std::move(idx));
  }
}

RadicandSet radicands_from_primes(u64 p, std::span<const u64> primes) { return RadicandSet(p, consecutive_products(primes)); }

FactoredPolynomial build_kummer_poly(const RadicandSet& b) {
  std::vector<IntPolynomial> factors;
  for (const auto& r : b.radicands()) factors.push_back(IntPolynomial::monomial(1, static_cast<int>(b.p())) - IntPolynomial::constant(r));
  return product_of(std::move(factors));
}

bool nu_fixes_some_root(const NuMap& nu, const RadicandSet& b) {
  const u64 p = b.p();
  if (nu.zeta_value == 0 || nu.zeta_value >= p) fail(Errc::BadParameters, "zeta value must lie in [1, p)");
  std::vector<u64> values;
  for (u64 q : b.support()) {
    const auto it = nu.values.find(q);
    if (it == nu.values.end()) fail(Errc::SupportMismatch, "no value for support prime " + std::to_string(q));
    values.push_back(it->second % p);
  }
  if (nu.zeta_value != 1) return true;
  return some_sum_vanishes(b, values);
}

ExactResult is_exceptional_exact(const RadicandSet& b, Enumeration mode) {
  const std::size_t n = b.support().size();
  const u64 p = b.p();
  if (n > kMaxKummerSupport || checked_power(p, n, kMaxKummerMaps) > kMaxKummerMaps) {
    fail(Errc::EnumerationTooLarge, "p^|L| = " + std::to_string(p) + "^" + std::to_string(n) + " exceeds the enumeration bound");
  }
  if (mode == Enumeration::Reduced) {
    const auto w = reduced_search(b);
    if (!w) return {true, std::nullopt};
    return {false, to_map(b, *w, 1)};
  }
  const u64 maps = checked_power(p, n, kMaxKummerMaps);
  if (maps * p * (p - 1) > 10 * kMaxKummerMaps) fail(Errc::EnumerationTooLarge, "full enumeration too large");
  for (u64 zeta = 1; zeta < p; ++zeta) {
    std::vector<u64> nu(n, 0);
    for (u64 k = 0; k < maps; ++k) {
      u64 code = k;
      for (std::size_t i = n; i-- > 0;) {
        nu[i] = code % p;
        code /= p;
      }
      if (!fixes_literal(b, nu, zeta)) return {false, to_map(b, nu, zeta)};
    }
  }
  return {true, std::nullopt};
}

std::optional<NuMap> non_fixing_witness(const RadicandSet& b) { return is_exceptional_exact(b).witness; }

std::optional<std::pair<std::size_t, std::size_t>> zero_sum_consecutive(std::span<const std::vector<u64>> seq,
                                                                        std::span<const u64> moduli) {
  for (u64 m : moduli) {
    if (m == 0) fail(Errc::BadParameters, "moduli must be at least 1");
  }
  std::vector<std::vector<u64>> prefix{std::vector<u64>(moduli.size(), 0)};
  for (const auto& g : seq) {
    if (g.size() != moduli.size()) fail(Errc::BadParameters, "element arity differs from the number of moduli");
    auto s = prefix.back();
    for (std::size_t c = 0; c < s.size(); ++c) s[c] = addmod(s[c], g[c] % moduli[c], moduli[c]);
    prefix.push_back(std::move(s));
  }
  // next[k]: least j > k with prefix[j] == prefix[k]
  std::map<std::vector<u64>, std::size_t> last;
  std::vector<std::size_t> next(prefix.size(), 0);
  for (std::size_t k = prefix.size(); k-- > 0;) {
    const auto it = last.find(prefix[k]);
    next[k] = it == last.end() ? 0 : it->second;
    last[prefix[k]] = k;
  }
  for (std::size_t k = 0; k + 1 < prefix.size(); ++k) {
    if (next[k] != 0) return std::pair{k + 1, next[k]};
  }
  return std::nullopt;
}

}  // namespace exceptio
