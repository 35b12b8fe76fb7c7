#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "exceptio/arith.hpp"
#include "exceptio/kummer.hpp"

namespace exceptio {

// Sum of the coordinates in the support; bit i set means X_i is present.
struct LinearForm {
  std::uint32_t mask = 0;

  std::vector<int> support() const;
  int size() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Ordered by support size, then span (max - min), then support lexicographically.
bool canonical_less(const LinearForm& a, const LinearForm& b);

inline constexpr int kMaxFormDimension = 20;

// All 2^n - 1 nonzero forms in canonical order. Throws DimensionTooLarge.
std::vector<LinearForm> all_forms(int n);

struct FormSet {
  u64 p = 2;
  int n = 1;
  std::vector<LinearForm> forms;  // canonical order, distinct

  // Throws NotPrime, DimensionTooLarge, or BadParameters for a form outside {0..n-1}.
  FormSet(u64 p, int n, std::vector<LinearForm> forms);
  std::vector<std::vector<int>> supports() const;
  friend bool operator==(const FormSet&, const FormSet&) = default;
};

inline constexpr int kMaxGoodDimension = 12;
inline constexpr u64 kMaxGoodPoints = 10'000'000;

struct GoodCheck {
  bool good = false;
  std::optional<std::vector<u64>> uncovered;  // lex-first point, x_0 most significant
};

// Throws EnumerationTooLarge.
GoodCheck is_good(const FormSet& t);

struct SearchOptions {
  // Fixes the first form to {0, ..., s-1}, which is no loss under coordinate permutations.
  bool symmetry = false;
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<std::size_t> minimum;
  std::optional<FormSet> witness;
  u64 nodes_explored = 0;
  bool exhaustive = false;
};

// Throws EnumerationTooLarge or BadParameters for a budget above 2^n - 1.
SearchResult min_good_size(u64 p, int n, std::size_t size_budget, const SearchOptions& options = {});
SearchResult min_over_n(u64 p, int n_max, const SearchOptions& options = {});

inline std::size_t conjectured_minimum(u64 p) { return static_cast<std::size_t>(p * (p + 1) / 2); }

// Forms indexed by position in the support; throws SupportMismatch when a
// radicand has a prime outside primes.
FormSet forms_from_radicands(const RadicandSet& b, std::span<const u64> primes);
FormSet forms_from_radicands(const RadicandSet& b);
// Throws SupportMismatch unless |primes| = n.
RadicandSet radicands_from_forms(const FormSet& t, std::span<const u64> primes);

}  // namespace exceptio
