#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exceptio/arith.hpp"

namespace exceptio {

class Permutation {
 public:
  Permutation() = default;
  // Throws BadParameters unless images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Cycles over {0, ..., degree-1}; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

  bool is_identity() const;
  int fixed_point_count() const;
  Permutation inverse() const;
  // "(0 1 2)(3 4)"; the identity is "()".
  std::string cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

// Sorted lexicographically by images.
using ElementSet = std::vector<Permutation>;

inline constexpr std::size_t kDefaultGroupCap = 200'000;

class PermutationGroup {
 public:
  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const ElementSet& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t cap() const { return cap_; }
  bool contains(const Permutation& g) const;

 private:
  friend PermutationGroup generate_group(int, std::span<const Permutation>, std::size_t);
  int degree_ = 0;
  std::vector<Permutation> generators_;
  ElementSet elements_;
  std::size_t cap_ = kDefaultGroupCap;
};

PermutationGroup generate_group(int degree, std::span<const Permutation> gens, std::size_t cap = kDefaultGroupCap);
// Degree taken from the generators; throws EmptySet when there are none.
PermutationGroup generate_group(std::span<const Permutation> gens, std::size_t cap = kDefaultGroupCap);
PermutationGroup generate_group(std::initializer_list<Permutation> gens, std::size_t cap = kDefaultGroupCap);

ElementSet point_stabilizer(const PermutationGroup& g, int point);

struct Coverage {
  bool covered = false;
  std::optional<Permutation> witness;  // lex-first fixed-point-free element
};

Coverage has_fixed_point_coverage(const PermutationGroup& g);

Rational chebotarev_root_density(const PermutationGroup& g);

// Sum of |Fix(g)| over the group.
std::size_t fixed_point_total(const PermutationGroup& g);
// By Burnside's lemma.
std::size_t orbit_count(const PermutationGroup& g);
// Orbit partition by union-find, each orbit ascending, ordered by least point.
std::vector<std::vector<int>> orbits(const PermutationGroup& g);
bool is_transitive(const PermutationGroup& g);

// Kernels of the surjective homomorphisms onto {+1, -1}, in ascending order.
std::vector<ElementSet> index2_subgroups(const PermutationGroup& g);

struct CosetCheck {
  ElementSet subgroup;
  bool verdict = false;
  std::vector<Permutation> violations;  // elements outside the subgroup without exactly one fixed point
};

// Throws NotIndexTwo unless h is a subgroup of index two.
CosetCheck unique_fp_coset_condition(const PermutationGroup& g, const ElementSet& h);

// Same count over G \ H for any subgroup H of G; throws BadParameters otherwise.
CosetCheck unique_fp_outside(const PermutationGroup& g, const ElementSet& h);

// Throws NotTransitive.
std::optional<ElementSet> admits_quadratic_completion(const PermutationGroup& g);

struct GroupSummary {
  std::size_t order = 0;
  bool transitive = false;
  std::size_t orbit_count = 0;
  Coverage coverage;
  Rational density;
  std::optional<ElementSet> quad_completion;  // absent also when not transitive
};

GroupSummary summarize(const PermutationGroup& g);

// Elements acting as x -> x + b mod n.
ElementSet translation_subgroup(const PermutationGroup& g);

PermutationGroup dihedral_group(int n);
PermutationGroup frobenius_group(u64 p, u64 q);

// Distinct subgroups of S_n generated by at most max_generators elements,
// ordered by (order, elements).
std::vector<PermutationGroup> subgroups_of_symmetric(int n, int max_generators);
std::vector<PermutationGroup> all_transitive_subgroups(int n);

// "degree n" followed by one generator per line in cycle notation.
PermutationGroup parse_group(std::string_view text, std::size_t cap = kDefaultGroupCap);
Permutation parse_cycles(int degree, std::string_view text);

}  // namespace exceptio
