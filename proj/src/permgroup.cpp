#include "exceptio/permgroup.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "exceptio/error.hpp"

namespace exceptio {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

std::size_t index_of(const ElementSet& set, const Permutation& g) {
  const auto it = std::lower_bound(set.begin(), set.end(), g);
  if (it == set.end() || *it != g) return set.size();
  return static_cast<std::size_t>(it - set.begin());
}

bool sorted_contains(const ElementSet& set, const Permutation& g) { return index_of(set, g) != set.size(); }

// next[s][x] = index of gens[s] * elements[x].
std::vector<std::vector<std::size_t>> left_action(const PermutationGroup& g) {
  std::vector<std::vector<std::size_t>> next;
  for (const auto& s : g.generators()) {
    std::vector<std::size_t> row(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) row[x] = index_of(g.elements(), s * g.elements()[x]);
    next.push_back(std::move(row));
  }
  return next;
}

// Greedy subset of gens generating the same group; each kept generator at
// least doubles the order.
std::vector<Permutation> prune_generators(int degree, std::span<const Permutation> gens, std::size_t cap) {
  std::vector<Permutation> kept;
  PermutationGroup current = generate_group(degree, kept, cap);
  for (const auto& s : gens) {
    if (current.contains(s)) continue;
    kept.push_back(s);
    current = generate_group(degree, kept, cap);
  }
  return kept;
}

bool is_subgroup(const PermutationGroup& g, const ElementSet& h) {
  if (h.empty() || !std::is_sorted(h.begin(), h.end())) return false;
  if (std::adjacent_find(h.begin(), h.end()) != h.end()) return false;
  if (!std::all_of(h.begin(), h.end(), [&](const Permutation& x) { return g.contains(x); })) return false;
  if (g.order() % h.size() != 0) return false;
  const auto gens = prune_generators(g.degree(), h, g.cap());
  return generate_group(g.degree(), gens, g.cap()).elements() == h;
}

CosetCheck count_outside(const PermutationGroup& g, const ElementSet& h) {
  CosetCheck check;
  check.subgroup = h;
  for (const auto& x : g.elements()) {
    if (!sorted_contains(h, x) && x.fixed_point_count() != 1) check.violations.push_back(x);
  }
  check.verdict = check.violations.empty();
  return check;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      fail(Errc::BadParameters, "images are not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int x = cycle[i];
      if (x < 0 || x >= degree) fail(Errc::PointOutOfRange, "point " + std::to_string(x) + " outside degree " + std::to_string(degree));
      if (used[static_cast<std::size_t>(x)]) fail(Errc::ParseError, "point " + std::to_string(x) + " repeated in cycles");
      used[static_cast<std::size_t>(x)] = true;
      images[static_cast<std::size_t>(x)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::fixed_point_count() const {
  int n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == static_cast<int>(i);
  return n;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += '(';
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      if (x != i) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) fail(Errc::DegreeMismatch, "composing permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) images[static_cast<std::size_t>(x)] = a(b(x));
  return Permutation(std::move(images));
}

bool PermutationGroup::contains(const Permutation& g) const { return sorted_contains(elements_, g); }

PermutationGroup generate_group(int degree, std::span<const Permutation> gens, std::size_t cap) {
  if (degree < 1) fail(Errc::BadParameters, "degree must be positive");
  if (cap < 1) fail(Errc::BadParameters, "cap must be positive");
  for (const auto& s : gens) {
    if (s.degree() != degree) fail(Errc::DegreeMismatch, "generator degree " + std::to_string(s.degree()) + " differs from " + std::to_string(degree));
  }
  const Permutation e = Permutation::identity(degree);
  std::unordered_set<Permutation, PermutationHash> seen{e};
  std::deque<Permutation> queue{e};
  while (!queue.empty()) {
    const Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation y = s * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) fail(Errc::GroupTooLarge, "group order exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  PermutationGroup g;
  g.degree_ = degree;
  g.generators_.assign(gens.begin(), gens.end());
  g.elements_.assign(seen.begin(), seen.end());
  std::sort(g.elements_.begin(), g.elements_.end());
  g.cap_ = cap;
  return g;
}

PermutationGroup generate_group(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty()) fail(Errc::EmptySet, "no generators to infer the degree from");
  return generate_group(gens.front().degree(), gens, cap);
}

PermutationGroup generate_group(std::initializer_list<Permutation> gens, std::size_t cap) {
  return generate_group(std::span<const Permutation>(gens.begin(), gens.size()), cap);
}

ElementSet point_stabilizer(const PermutationGroup& g, int point) {
  if (point < 0 || point >= g.degree()) fail(Errc::PointOutOfRange, "point " + std::to_string(point) + " outside degree " + std::to_string(g.degree()));
  ElementSet out;
  for (const auto& x : g.elements()) {
    if (x(point) == point) out.push_back(x);
  }
  return out;
}

Coverage has_fixed_point_coverage(const PermutationGroup& g) {
  for (const auto& x : g.elements()) {
    if (x.fixed_point_count() == 0) return {false, x};
  }
  return {true, std::nullopt};
}

Rational chebotarev_root_density(const PermutationGroup& g) {
  u64 with_fixed = 0;
  for (const auto& x : g.elements()) with_fixed += x.fixed_point_count() > 0;
  return Rational(with_fixed, g.order());
}

std::size_t fixed_point_total(const PermutationGroup& g) {
  std::size_t total = 0;
  for (const auto& x : g.elements()) total += static_cast<std::size_t>(x.fixed_point_count());
  return total;
}

std::size_t orbit_count(const PermutationGroup& g) { return fixed_point_total(g) / g.order(); }

std::vector<std::vector<int>> orbits(const PermutationGroup& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.degree()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& s : g.generators()) {
    for (int x = 0; x < g.degree(); ++x) {
      const int a = find(x);
      const int b = find(s(x));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int x = 0; x < g.degree(); ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, orbit] : by_root) out.push_back(std::move(orbit));
  return out;
}

bool is_transitive(const PermutationGroup& g) { return orbit_count(g) == 1; }

std::vector<ElementSet> index2_subgroups(const PermutationGroup& g) {
  if (g.order() % 2 != 0) return {};
  const auto gens = prune_generators(g.degree(), g.generators(), g.cap());
  const PermutationGroup pruned = generate_group(g.degree(), gens, g.cap());
  const auto next = left_action(pruned);
  const std::size_t e = index_of(pruned.elements(), Permutation::identity(g.degree()));
  std::vector<ElementSet> out;
  for (u64 mask = 1; mask < (u64{1} << gens.size()); ++mask) {
    std::vector<int> sign(pruned.order(), 0);
    sign[e] = 1;
    std::vector<std::size_t> stack{e};
    bool consistent = true;
    while (!stack.empty() && consistent) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const int want = ((mask >> s) & 1) ? -sign[x] : sign[x];
        const std::size_t y = next[s][x];
        if (sign[y] == 0) {
          sign[y] = want;
          stack.push_back(y);
        } else if (sign[y] != want) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent) continue;
    ElementSet kernel;
    for (std::size_t i = 0; i < pruned.order(); ++i) {
      if (sign[i] == 1) kernel.push_back(pruned.elements()[i]);
    }
    out.push_back(std::move(kernel));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CosetCheck unique_fp_coset_condition(const PermutationGroup& g, const ElementSet& h) {
  if (h.size() * 2 != g.order() || !is_subgroup(g, h)) fail(Errc::NotIndexTwo, "not a subgroup of index two");
  return count_outside(g, h);
}

CosetCheck unique_fp_outside(const PermutationGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) fail(Errc::BadParameters, "not a subgroup of the group");
  return count_outside(g, h);
}

std::optional<ElementSet> admits_quadratic_completion(const PermutationGroup& g) {
  if (!is_transitive(g)) fail(Errc::NotTransitive, "group is not transitive");
  for (auto& h : index2_subgroups(g)) {
    if (count_outside(g, h).verdict) return std::move(h);
  }
  return std::nullopt;
}

GroupSummary summarize(const PermutationGroup& g) {
  GroupSummary s;
  s.order = g.order();
  s.orbit_count = orbit_count(g);
  s.transitive = s.orbit_count == 1;
  s.coverage = has_fixed_point_coverage(g);
  s.density = chebotarev_root_density(g);
  if (s.transitive) s.quad_completion = admits_quadratic_completion(g);
  return s;
}

ElementSet translation_subgroup(const PermutationGroup& g) {
  const int n = g.degree();
  ElementSet out;
  for (const auto& x : g.elements()) {
    bool translation = true;
    for (int i = 0; i < n && translation; ++i) translation = x(i) == (i + x(0)) % n;
    if (translation) out.push_back(x);
  }
  return out;
}

PermutationGroup dihedral_group(int n) {
  if (n < 3) fail(Errc::DegreeTooSmall, "dihedral group needs n >= 3");
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rotation[static_cast<std::size_t>(i)] = (i + 1) % n;
    reflection[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return generate_group({Permutation(std::move(rotation)), Permutation(std::move(reflection))});
}

PermutationGroup frobenius_group(u64 p, u64 q) {
  if (!is_prime(p) || !is_prime(q) || (p - 1) % q != 0) {
    fail(Errc::BadParameters, "need primes q | p - 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
  if (p * q > kDefaultGroupCap) fail(Errc::GroupTooLarge, "order p*q exceeds cap");
  u64 a = 2;
  while (powmod(a, q, p) != 1) ++a;
  const int n = static_cast<int>(p);
  std::vector<int> shift(p);
  std::vector<int> scale(p);
  for (u64 x = 0; x < p; ++x) {
    shift[x] = static_cast<int>((x + 1) % p);
    scale[x] = static_cast<int>(mulmod(a, x, p));
  }
  return generate_group(n, std::vector<Permutation>{Permutation(std::move(shift)), Permutation(std::move(scale))});
}

std::vector<PermutationGroup> subgroups_of_symmetric(int n, int max_generators) {
  if (n < 1) fail(Errc::DegreeTooSmall, "degree must be positive");
  if (n > 5) fail(Errc::DegreeTooLarge, "subgroup enumeration is limited to degree 5");
  ElementSet sym;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do sym.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  const std::size_t order = sym.size();
  std::vector<std::vector<std::size_t>> mult(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) mult[a][b] = index_of(sym, sym[a] * sym[b]);
  }

  using Mask = std::array<u64, 2>;
  auto closure = [&](const std::vector<std::size_t>& gens) {
    Mask mask{1, 0};
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t s : gens) {
        const std::size_t y = mult[s][x];
        if (!((mask[y / 64] >> (y % 64)) & 1)) {
          mask[y / 64] |= u64{1} << (y % 64);
          stack.push_back(y);
        }
      }
    }
    return mask;
  };

  std::map<Mask, std::vector<std::size_t>> found{{Mask{1, 0}, {}}};
  std::vector<std::pair<Mask, std::vector<std::size_t>>> frontier(found.begin(), found.end());
  for (int level = 0; level < max_generators; ++level) {
    std::vector<std::pair<Mask, std::vector<std::size_t>>> fresh;
    for (const auto& [mask, gens] : frontier) {
      for (std::size_t g = 1; g < order; ++g) {
        if ((mask[g / 64] >> (g % 64)) & 1) continue;
        auto extended = gens;
        extended.push_back(g);
        const Mask m = closure(extended);
        if (found.emplace(m, extended).second) fresh.emplace_back(m, extended);
      }
    }
    frontier = std::move(fresh);
  }

  std::vector<PermutationGroup> out;
  for (const auto& [mask, gens] : found) {
    std::vector<Permutation> perms;
    for (std::size_t i : gens) perms.push_back(sym[i]);
    out.push_back(generate_group(n, perms));
  }
  std::sort(out.begin(), out.end(), [](const PermutationGroup& a, const PermutationGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<PermutationGroup> all_transitive_subgroups(int n) {
  if (n < 3) fail(Errc::DegreeTooSmall, "transitive subgroup search needs n >= 3");
  if (n > 5) fail(Errc::DegreeTooLarge, "transitive subgroup search is limited to n <= 5");
  std::vector<PermutationGroup> out;
  for (auto& g : subgroups_of_symmetric(n, 3)) {
    if (is_transitive(g)) out.push_back(std::move(g));
  }
  return out;
}

Permutation parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_space();
  if (i == text.size()) fail(Errc::ParseError, "empty generator");
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::ParseError, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
      if (i == text.size()) fail(Errc::ParseError, "unclosed cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int x = 0;
      const auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), x);
      if (ec != std::errc()) fail(Errc::ParseError, "bad point in \"" + std::string(text) + "\"");
      i = static_cast<std::size_t>(end - text.data());
      cycle.push_back(x);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

PermutationGroup parse_group(std::string_view text, std::size_t cap) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  constexpr std::string_view kHeader = "degree";
  if (lines.empty() || !lines[0].starts_with(kHeader)) fail(Errc::ParseError, "group file must start with \"degree n\"");
  std::string_view rest = lines[0].substr(kHeader.size());
  while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
  int degree = 0;
  const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), degree);
  if (ec != std::errc() || end != rest.data() + rest.size() || degree < 1) fail(Errc::ParseError, "bad degree line \"" + std::string(lines[0]) + "\"");
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k < lines.size(); ++k) gens.push_back(parse_cycles(degree, lines[k]));
  return generate_group(degree, gens, cap);
}

}  // namespace exceptio
