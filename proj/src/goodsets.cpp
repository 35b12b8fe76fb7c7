#include "exceptio/goodsets.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "exceptio/error.hpp"

namespace exceptio {

namespace {

u64 point_count(u64 p, int n) {
  u64 r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > kMaxGoodPoints / p) return kMaxGoodPoints + 1;
    r *= p;
  }
  return r;
}

void check_enumerable(u64 p, int n) {
  if (n > kMaxGoodDimension || point_count(p, n) > kMaxGoodPoints) {
    fail(Errc::EnumerationTooLarge, "p^n = " + std::to_string(p) + "^" + std::to_string(n) + " points exceed the enumeration bound");
  }
}

// Digits of a point index, x_0 most significant.
std::vector<u64> point_digits(u64 index, u64 p, int n) {
  std::vector<u64> x(static_cast<std::size_t>(n));
  for (int i = n; i-- > 0;) {
    x[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return x;
}

using Bits = std::vector<u64>;

// zero[f] marks the points where form f vanishes.
std::vector<Bits> zero_sets(u64 p, int n, const std::vector<LinearForm>& forms) {
  const u64 points = point_count(p, n);
  const std::size_t words = static_cast<std::size_t>((points + 63) / 64);
  constexpr u64 kMaxWords = u64{1} << 24;
  if (words * forms.size() > kMaxWords) fail(Errc::EnumerationTooLarge, "zero-set tables exceed the memory bound");
  std::vector<Bits> zero(forms.size(), Bits(words, 0));
  std::vector<u64> x(static_cast<std::size_t>(n), 0);
  for (u64 idx = 0; idx < points; ++idx) {
    for (std::size_t f = 0; f < forms.size(); ++f) {
      u64 s = 0;
      for (int i = 0; i < n; ++i) {
        if ((forms[f].mask >> i) & 1) s += x[static_cast<std::size_t>(i)];
      }
      if (s % p == 0) zero[f][idx / 64] |= u64{1} << (idx % 64);
    }
    for (int i = n; i-- > 0;) {
      if (++x[static_cast<std::size_t>(i)] < p) break;
      x[static_cast<std::size_t>(i)] = 0;
    }
  }
  return zero;
}

class Search {
 public:
  Search(u64 p, int n, const std::vector<LinearForm>& forms)
      : forms_(forms), zero_(zero_sets(p, n, forms)), points_(point_count(p, n)), per_form_(points_ / p) {}

  // Lex-first k-subset of forms starting with first; counts nodes.
  // Gives up once stop holds a branch index below branch_id.
  std::optional<std::vector<std::size_t>> branch(std::size_t k, std::size_t first, u64& nodes, std::size_t branch_id = 0,
                                                 const std::atomic<std::size_t>* stop = nullptr) const {
    std::vector<std::size_t> chosen{first};
    std::vector<Bits> covered(k + 1);
    covered[1] = zero_[first];
    if (dfs(k, 1, first + 1, covered, chosen, nodes, branch_id, stop)) return chosen;
    return std::nullopt;
  }

  std::size_t form_count() const { return forms_.size(); }

 private:
  bool dfs(std::size_t k, std::size_t depth, std::size_t next, std::vector<Bits>& covered, std::vector<std::size_t>& chosen,
           u64& nodes, std::size_t branch_id, const std::atomic<std::size_t>* stop) const {
    ++nodes;
    if (stop && stop->load(std::memory_order_relaxed) < branch_id) return false;
    const Bits& cov = covered[depth];
    u64 covered_count = 0;
    std::size_t first_word = cov.size();
    for (std::size_t w = 0; w < cov.size(); ++w) {
      const u64 word = w + 1 == cov.size() && points_ % 64 ? cov[w] | ~((u64{1} << (points_ % 64)) - 1) : cov[w];
      covered_count += static_cast<u64>(std::popcount(word));
      if (first_word == cov.size() && word != ~u64{0}) first_word = w;
    }
    const u64 uncovered = static_cast<u64>(cov.size()) * 64 - covered_count;
    if (uncovered == 0) return true;
    const std::size_t remaining = k - depth;
    if (remaining == 0) return false;
    if (uncovered > remaining * per_form_) return false;
    const u64 tail = first_word + 1 == cov.size() && points_ % 64 ? cov[first_word] | ~((u64{1} << (points_ % 64)) - 1) : cov[first_word];
    const u64 u = first_word * 64 + static_cast<u64>(std::countr_one(tail));
    std::size_t last_cover = forms_.size();
    for (std::size_t f = forms_.size(); f-- > next;) {
      if ((zero_[f][u / 64] >> (u % 64)) & 1) {
        last_cover = f;
        break;
      }
    }
    if (last_cover == forms_.size()) return false;
    const std::size_t end = std::min(last_cover + 1, forms_.size() - remaining + 1);
    for (std::size_t f = next; f < end; ++f) {
      Bits& out = covered[depth + 1];
      out = cov;
      for (std::size_t w = 0; w < out.size(); ++w) out[w] |= zero_[f][w];
      chosen.push_back(f);
      if (dfs(k, depth + 1, f + 1, covered, chosen, nodes, branch_id, stop)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const std::vector<LinearForm>& forms_;
  std::vector<Bits> zero_;
  u64 points_;
  u64 per_form_;
};

std::vector<std::size_t> first_choices(const std::vector<LinearForm>& forms, const SearchOptions& options) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::uint32_t m = forms[i].mask;
    if (!options.symmetry || (m & (m + 1)) == 0) out.push_back(i);
  }
  return out;
}

struct SizeOutcome {
  std::optional<std::vector<std::size_t>> found;
  u64 nodes = 0;
};

SizeOutcome search_size(const Search& search, std::size_t k, const std::vector<std::size_t>& firsts, unsigned threads) {
  std::vector<std::optional<std::vector<std::size_t>>> found(firsts.size());
  std::vector<u64> nodes(firsts.size(), 0);
  std::atomic<std::size_t> best{firsts.size()};
  auto run = [&](std::size_t b) {
    if (firsts[b] + k > search.form_count()) return;
    found[b] = search.branch(k, firsts[b], nodes[b], b, threads > 1 ? &best : nullptr);
    if (found[b]) {
      std::size_t cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  };
  if (threads <= 1) {
    for (std::size_t b = 0; b < firsts.size() && b < best.load(); ++b) run(b);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t b; (b = cursor.fetch_add(1)) < firsts.size();) {
          if (b < best.load()) run(b);
        }
      });
    }
  }
  SizeOutcome out;
  const std::size_t winner = best.load();
  for (std::size_t b = 0; b < firsts.size() && b <= winner; ++b) out.nodes += nodes[b];
  if (winner < firsts.size()) out.found = std::move(found[winner]);
  return out;
}

}  // namespace

std::vector<int> LinearForm::support() const {
  std::vector<int> s;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1) s.push_back(i);
  }
  return s;
}

int LinearForm::size() const { return std::popcount(mask); }

bool canonical_less(const LinearForm& a, const LinearForm& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const int span_a = std::bit_width(a.mask) - std::countr_zero(a.mask);
  const int span_b = std::bit_width(b.mask) - std::countr_zero(b.mask);
  if (span_a != span_b) return span_a < span_b;
  return a.support() < b.support();
}

std::vector<LinearForm> all_forms(int n) {
  if (n < 1 || n > kMaxFormDimension) fail(Errc::DimensionTooLarge, "dimension must lie in [1, 20]");
  std::vector<LinearForm> out;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) out.push_back({m});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

FormSet::FormSet(u64 p_, int n_, std::vector<LinearForm> forms_) : p(p_), n(n_), forms(std::move(forms_)) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || n > kMaxFormDimension) fail(Errc::DimensionTooLarge, "dimension must lie in [1, 20]");
  for (const auto& f : forms) {
    if (f.mask == 0 || (f.mask >> n) != 0) fail(Errc::BadParameters, "form support outside {0, ..., n-1}");
  }
  std::sort(forms.begin(), forms.end(), canonical_less);
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
}

std::vector<std::vector<int>> FormSet::supports() const {
  std::vector<std::vector<int>> out;
  for (const auto& f : forms) out.push_back(f.support());
  return out;
}

GoodCheck is_good(const FormSet& t) {
  check_enumerable(t.p, t.n);
  const u64 points = point_count(t.p, t.n);
  std::vector<u64> x(static_cast<std::size_t>(t.n), 0);
  for (u64 idx = 0; idx < points; ++idx) {
    bool hit = false;
    for (const auto& f : t.forms) {
      u64 s = 0;
      for (int i = 0; i < t.n; ++i) {
        if ((f.mask >> i) & 1) s += x[static_cast<std::size_t>(i)];
      }
      if (s % t.p == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, point_digits(idx, t.p, t.n)};
    for (int i = t.n; i-- > 0;) {
      if (++x[static_cast<std::size_t>(i)] < t.p) break;
      x[static_cast<std::size_t>(i)] = 0;
    }
  }
  return {true, std::nullopt};
}

SearchResult min_good_size(u64 p, int n, std::size_t size_budget, const SearchOptions& options) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) fail(Errc::BadParameters, "dimension must be positive");
  check_enumerable(p, n);
  const auto forms = all_forms(n);
  if (size_budget > forms.size()) fail(Errc::BadParameters, "budget exceeds 2^n - 1 = " + std::to_string(forms.size()));
  const Search search(p, n, forms);
  const auto firsts = first_choices(forms, options);
  SearchResult result;
  for (std::size_t k = 1; k <= size_budget; ++k) {
    auto outcome = search_size(search, k, firsts, std::max(1u, options.threads));
    result.nodes_explored += outcome.nodes;
    if (outcome.found) {
      std::vector<LinearForm> picked;
      for (std::size_t i : *outcome.found) picked.push_back(forms[i]);
      result.minimum = k;
      result.witness = FormSet(p, n, std::move(picked));
      break;
    }
  }
  result.exhaustive = true;
  return result;
}

SearchResult min_over_n(u64 p, int n_max, const SearchOptions& options) {
  if (n_max < 1) fail(Errc::BadParameters, "n_max must be positive");
  SearchResult best;
  best.exhaustive = true;
  for (int n = 1; n <= n_max; ++n) {
    std::size_t budget = (std::size_t{1} << n) - 1;
    if (best.minimum) budget = std::min(budget, *best.minimum - 1);
    if (budget == 0) continue;
    auto r = min_good_size(p, n, budget, options);
    best.nodes_explored += r.nodes_explored;
    best.exhaustive = best.exhaustive && r.exhaustive;
    if (r.minimum) {
      best.minimum = r.minimum;
      best.witness = std::move(r.witness);
    }
  }
  return best;
}

FormSet forms_from_radicands(const RadicandSet& b, std::span<const u64> primes) {
  validate_prime_set(primes);
  if (primes.size() > static_cast<std::size_t>(kMaxFormDimension)) fail(Errc::DimensionTooLarge, "too many primes for a form set");
  std::vector<LinearForm> forms;
  for (std::size_t r = 0; r < b.radicands().size(); ++r) {
    std::uint32_t mask = 0;
    for (std::size_t i : b.divisor_indices()[r]) {
      const u64 q = b.support()[i];
      const auto it = std::lower_bound(primes.begin(), primes.end(), q);
      if (it == primes.end() || *it != q) fail(Errc::SupportMismatch, "prime " + std::to_string(q) + " is outside the prime set");
      mask |= std::uint32_t{1} << (it - primes.begin());
    }
    forms.push_back({mask});
  }
  return FormSet(b.p(), static_cast<int>(primes.size()), std::move(forms));
}

FormSet forms_from_radicands(const RadicandSet& b) { return forms_from_radicands(b, b.support()); }

RadicandSet radicands_from_forms(const FormSet& t, std::span<const u64> primes) {
  validate_prime_set(primes);
  if (primes.size() != static_cast<std::size_t>(t.n)) fail(Errc::SupportMismatch, "need exactly n primes");
  std::vector<mpz_class> radicands;
  for (const auto& f : t.forms) {
    mpz_class b = 1;
    for (int i : f.support()) b *= static_cast<unsigned long>(primes[static_cast<std::size_t>(i)]);
    radicands.push_back(b);
  }
  return RadicandSet(t.p, std::move(radicands));
}

}  // namespace exceptio
