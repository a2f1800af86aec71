#include <algorithm>
#include <map>
#include <set>

#include "ncg/bitset.hpp"
#include "ncg/lie_algebra.hpp"

namespace ncg {

namespace {

// Beyond this many explored abelian subspaces the exact cover gives up.
constexpr std::size_t kMaxAbelianNodes = 200'000;

std::vector<std::uint64_t> subspace_key(const Subspace& s) {
  std::vector<std::uint64_t> key;
  for (std::size_t i = 0; i < s.dim(); ++i) key.push_back(vector_code(s.field(), s.basis().row(i)));
  return key;
}

Bitset element_set(const LieAlgebra& algebra, const Subspace& s) {
  Bitset bits(static_cast<std::size_t>(algebra.cardinality()));
  s.for_each_element([&](const Vector& v) { bits.set(static_cast<std::size_t>(vector_code(algebra.field(), v))); });
  return bits;
}

// Returns nullopt when more than kMaxAbelianNodes subspaces would be visited.
std::optional<std::vector<Subspace>> search_maximal(const LieAlgebra& algebra) {
  std::set<std::vector<std::uint64_t>> visited;
  std::map<std::vector<std::uint64_t>, Subspace> maximal;
  std::vector<Subspace> stack{center(algebra)};
  visited.insert(subspace_key(stack.back()));
  while (!stack.empty()) {
    Subspace a = std::move(stack.back());
    stack.pop_back();
    const Subspace c = centralizer_of_set(algebra, a.basis_vectors());
    if (c.dim() == a.dim()) {
      maximal.emplace(subspace_key(a), a);
      continue;
    }
    c.for_each_element([&](const Vector& v) {
      if (a.member(v)) return;
      Subspace child = a.sum(Subspace::span(algebra.field_ptr(), algebra.dim(), {v}));
      if (visited.insert(subspace_key(child)).second) stack.push_back(std::move(child));
    });
    if (visited.size() > kMaxAbelianNodes) return std::nullopt;
  }
  std::vector<Subspace> out;
  for (auto& [key, s] : maximal) out.push_back(std::move(s));
  return out;
}

struct SetCover {
  std::vector<Bitset> sets;
  std::vector<std::vector<std::size_t>> containing;  // element -> sets covering it
  std::size_t max_set = 1;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit = 0;
  bool aborted = false;
  std::size_t best = 0;

  void search(const Bitset& uncovered, std::size_t used) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) {
      best = std::min(best, used);
      return;
    }
    if (used + (remaining + max_set - 1) / max_set >= best) return;

    // Branch on the uncovered element with the fewest covering sets.
    std::size_t pick = uncovered.size();
    std::size_t fewest = static_cast<std::size_t>(-1);
    uncovered.for_each([&](std::size_t e) {
      if (containing[e].size() < fewest) {
        fewest = containing[e].size();
        pick = e;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto s : containing[pick]) order.emplace_back(uncovered.intersection_count(sets[s]), s);
    std::sort(order.begin(), order.end(), [](auto x, auto y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
    for (auto [gain, s] : order) {
      Bitset next = uncovered;
      next.subtract(sets[s]);
      search(next, used + 1);
    }
  }
};

std::size_t greedy_cover(const std::vector<Bitset>& sets, Bitset uncovered) {
  std::size_t used = 0;
  while (uncovered.any()) {
    std::size_t best_gain = 0;
    std::size_t best_set = sets.size();
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const std::size_t gain = uncovered.intersection_count(sets[s]);
      if (gain > best_gain) {
        best_gain = gain;
        best_set = s;
      }
    }
    if (best_set == sets.size()) return static_cast<std::size_t>(-1);
    uncovered.subtract(sets[best_set]);
    ++used;
  }
  return used;
}

}  // namespace

std::optional<std::vector<Subspace>> maximal_abelian_subalgebras(const LieAlgebra& algebra,
                                                                 std::uint64_t max_elements) {
  if (algebra.cardinality() > max_elements) return std::nullopt;
  return search_maximal(algebra);
}

std::optional<Bounded> min_abelian_cover(const LieAlgebra& algebra, const Guards& guards) {
  if (algebra.is_abelian()) return Bounded{1, true};
  const std::uint64_t size = algebra.cardinality();
  if (size > std::max(guards.cover, guards.elements)) return std::nullopt;

  Bitset universe(static_cast<std::size_t>(size));
  universe.set_all();

  if (size <= guards.cover) {
    if (auto maximal = search_maximal(algebra)) {
      SetCover cover;
      for (const auto& m : *maximal) cover.sets.push_back(element_set(algebra, m));
      cover.containing.resize(static_cast<std::size_t>(size));
      for (std::size_t s = 0; s < cover.sets.size(); ++s) {
        cover.max_set = std::max(cover.max_set, cover.sets[s].count());
        cover.sets[s].for_each([&](std::size_t e) { cover.containing[e].push_back(s); });
      }
      cover.node_limit = guards.search_nodes;
      const std::size_t greedy = greedy_cover(cover.sets, universe);
      cover.best = greedy;
      cover.search(universe, 0);
      return Bounded{static_cast<long long>(cover.best), !cover.aborted};
    }
  }

  // Upper bound from abelian centralizers, falling back to span{x} + Z(L)
  // for elements whose centralizer is not abelian.
  const Subspace z = center(algebra);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Bitset> sets;
  for_each_line(algebra.field(), algebra.dim(), [&](const Vector& x) {
    if (z.member(x)) return;
    Subspace c = centralizer(algebra, x);
    if (!is_abelian_subspace(algebra, c)) c = z.sum(Subspace::span(algebra.field_ptr(), algebra.dim(), {x}));
    if (seen.insert(subspace_key(c)).second) sets.push_back(element_set(algebra, c));
  });
  const std::size_t bound = greedy_cover(sets, universe);
  // A group is never the union of two proper subgroups, so 3 is a lower bound.
  return Bounded{static_cast<long long>(bound), bound == 3};
}

}  // namespace ncg
