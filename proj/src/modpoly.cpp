#include "exceptio/modpoly.hpp"

#include <algorithm>
#include <random>

#include "exceptio/error.hpp"

namespace exceptio {

namespace {

void trim(std::vector<u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPolynomial x_poly(u64 p) { return ModPolynomial(p, {0, 1 % p}); }

// Appends all roots of g, a monic product of distinct linear factors.
void split_linear(const ModPolynomial& g, std::mt19937_64& rng, std::vector<u64>& out) {
  const u64 p = g.modulus();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back((p - g.coeffs()[0]) % p);
    return;
  }
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      if (g(x) == 0) out.push_back(x);
    }
    return;
  }
  std::uniform_int_distribution<u64> pick(0, p - 1);
  for (;;) {
    const ModPolynomial shifted(p, {pick(rng), 1});
    ModPolynomial w = powmod(shifted, (p - 1) / 2, g) - ModPolynomial(p, {1});
    ModPolynomial d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(g / d, rng, out);
      return;
    }
  }
}

// x^p - x reduced modulo monic f, then gcd with f.
ModPolynomial linear_part(const ModPolynomial& monic) {
  const u64 p = monic.modulus();
  const ModPolynomial x = x_poly(p);
  const ModPolynomial xp = powmod(x, p, monic);
  return gcd(monic, xp - (x % monic));
}

// Forward-difference sweep over all residues; returns early when `first_only`.
std::vector<u64> sweep_roots(const ModPolynomial& f, bool first_only) {
  const u64 p = f.modulus();
  const int d = f.degree();
  std::vector<u64> out;
  if (d == 0) return out;
  if (static_cast<u64>(d) >= p || p >= (u64{1} << 32)) {
    for (u64 x = 0; x < p; ++x) {
      if (f(x) == 0) {
        out.push_back(x);
        if (first_only) break;
      }
    }
    return out;
  }
  // diff[i] = i-th forward difference of f at the current x.
  std::vector<u64> diff(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) diff[static_cast<std::size_t>(i)] = f(static_cast<u64>(i));
  for (int k = 1; k <= d; ++k) {
    for (int i = d; i >= k; --i) {
      diff[static_cast<std::size_t>(i)] = submod(diff[static_cast<std::size_t>(i)], diff[static_cast<std::size_t>(i - 1)], p);
    }
  }
  const std::size_t n = diff.size();
  u64* dv = diff.data();
  for (u64 x = 0; x < p; ++x) {
    if (dv[0] == 0) {
      out.push_back(x);
      if (first_only) break;
    }
    // p < 2^32 here, so the sums cannot overflow
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const u64 s = dv[i] + dv[i + 1];
      dv[i] = s >= p ? s - p : s;
    }
  }
  return out;
}

bool use_sweep(u64 p, RootStrategy strategy) {
  switch (strategy) {
    case RootStrategy::Sweep: return p < (u64{1} << 32);
    case RootStrategy::Frobenius: return false;
    case RootStrategy::Auto: break;
  }
  return p < kSweepThreshold;
}

void require_nonzero(const ModPolynomial& f) {
  if (f.is_zero()) fail(Errc::ZeroModP, "polynomial vanishes identically mod " + std::to_string(f.modulus()));
}

ModPolynomial pth_root(const ModPolynomial& f) {
  const u64 p = f.modulus();
  std::vector<u64> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) c.push_back(f.coeffs()[i]);
  return ModPolynomial(p, std::move(c));
}

}  // namespace

ModPolynomial::ModPolynomial(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim(c_);
}

u64 ModPolynomial::operator()(u64 x) const {
  x %= p_;
  u64 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x, p_), *it, p_);
  return acc;
}

ModPolynomial reduce_mod(const IntPolynomial& f, u64 p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::vector<u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(mod_u64(a, p));
  return ModPolynomial(p, std::move(c));
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = addmod(c[i], b.coeffs()[i], p);
  return ModPolynomial(p, std::move(c));
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  const u64 p = a.modulus();
  std::vector<u64> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] = submod(c[i], b.coeffs()[i], p);
  return ModPolynomial(p, std::move(c));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  const u64 p = a.modulus();
  if (a.is_zero() || b.is_zero()) return ModPolynomial(p, {});
  std::vector<u64> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = addmod(c[i + j], mulmod(a.coeffs()[i], b.coeffs()[j], p), p);
    }
  }
  return ModPolynomial(p, std::move(c));
}

ModPolynomial derivative(const ModPolynomial& f) {
  const u64 p = f.modulus();
  if (f.degree() < 1) return ModPolynomial(p, {});
  std::vector<u64> c(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = mulmod(f.coeffs()[i], i % p, p);
  return ModPolynomial(p, std::move(c));
}

ModPolynomial make_monic(const ModPolynomial& f) {
  if (f.is_zero() || f.leading() == 1) return f;
  const u64 p = f.modulus();
  const u64 inv = invmod_prime(f.leading(), p);
  std::vector<u64> c = f.coeffs();
  for (auto& x : c) x = mulmod(x, inv, p);
  return ModPolynomial(p, std::move(c));
}

std::pair<ModPolynomial, ModPolynomial> divrem(const ModPolynomial& a, const ModPolynomial& b) {
  require_nonzero(b);
  const u64 p = a.modulus();
  if (a.degree() < b.degree()) return {ModPolynomial(p, {}), a};
  const u64 inv = invmod_prime(b.leading(), p);
  std::vector<u64> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  std::vector<u64> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const u64 coef = mulmod(r[k], inv, p);
    q[k - db] = coef;
    if (coef == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      r[k - db + i] = submod(r[k - db + i], mulmod(coef, b.coeffs()[i], p), p);
    }
  }
  r.resize(db);
  return {ModPolynomial(p, std::move(q)), ModPolynomial(p, std::move(r))};
}

ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return divrem(a, b).second; }
ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b) { return divrem(a, b).first; }

ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

ModPolynomial powmod(const ModPolynomial& base, u64 e, const ModPolynomial& m) {
  const u64 p = m.modulus();
  ModPolynomial result = ModPolynomial(p, {1}) % m;
  ModPolynomial b = base % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

std::vector<u64> roots_mod_p(const ModPolynomial& f, RootStrategy strategy) {
  require_nonzero(f);
  if (f.degree() == 0) return {};
  if (use_sweep(f.modulus(), strategy)) return sweep_roots(f, false);
  const ModPolynomial g = linear_part(make_monic(f));
  std::vector<u64> out;
  std::mt19937_64 rng(f.modulus() ^ 0x9e3779b97f4a7c15ULL);
  split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_root_mod_p(const ModPolynomial& f, RootStrategy strategy) {
  require_nonzero(f);
  if (f.degree() == 0) return false;
  if (f.coeffs()[0] == 0) return true;
  if (use_sweep(f.modulus(), strategy)) return !sweep_roots(f, true).empty();
  return linear_part(make_monic(f)).degree() > 0;
}

std::vector<std::pair<ModPolynomial, int>> square_free_decomposition(const ModPolynomial& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<ModPolynomial, int>> out;
  if (f.degree() < 1) return out;
  const ModPolynomial monic = make_monic(f);
  const ModPolynomial df = derivative(monic);
  auto add_pth_power = [&](const ModPolynomial& c) {
    for (auto& [g, m] : square_free_decomposition(pth_root(c))) {
      out.emplace_back(std::move(g), m * static_cast<int>(p));
    }
  };
  if (df.is_zero()) {
    add_pth_power(monic);
    return out;
  }
  ModPolynomial c = gcd(monic, df);
  ModPolynomial w = monic / c;
  int i = 1;
  while (w.degree() > 0) {
    ModPolynomial y = gcd(w, c);
    ModPolynomial z = w / y;
    if (z.degree() > 0) out.emplace_back(std::move(z), i);
    ++i;
    c = c / y;
    w = std::move(y);
  }
  if (c.degree() > 0) add_pth_power(c);
  return out;
}

std::vector<std::pair<int, ModPolynomial>> distinct_degree_factorisation(const ModPolynomial& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<int, ModPolynomial>> out;
  ModPolynomial g = make_monic(f);
  const ModPolynomial x = x_poly(p);
  ModPolynomial h = x % g;
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, p, g);
    ModPolynomial t = gcd(g, h - x);
    if (t.degree() > 0) {
      g = g / t;
      h = h % g;
      out.emplace_back(d, std::move(t));
    }
  }
  if (g.degree() > 0) out.emplace_back(g.degree(), std::move(g));
  return out;
}

FactorisationPattern factorisation_pattern(const ModPolynomial& f) {
  require_nonzero(f);
  FactorisationPattern degrees;
  for (const auto& [part, multiplicity] : square_free_decomposition(f)) {
    for (const auto& [d, product] : distinct_degree_factorisation(part)) {
      const int count = product.degree() / d * multiplicity;
      degrees.insert(degrees.end(), static_cast<std::size_t>(count), d);
    }
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace exceptio
