#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "ncg/graph.hpp"
#include "ncg/guards.hpp"

namespace ncg {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
inline constexpr std::uint64_t kDefaultNodeLimit = Guards{}.search_nodes;

/// BFS distances from `source`; kUnreachable for other components.
std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source);
bool is_connected(const Graph& g);
/// 0 for graphs with at most one vertex, nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);
/// Length of a shortest cycle, nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);
/// Connected with every degree even.
bool is_eulerian(const Graph& g);

enum class Hamiltonicity { Yes, No, DiracGuaranteed, Unknown };
std::string_view to_string(Hamiltonicity h);

/// Strict Dirac bound (order >= 3 and 2 * min degree > order).
bool dirac_condition(const Graph& g);
/// DiracGuaranteed when the strict Dirac bound holds; otherwise an exact
/// backtracking answer when order <= guard, else Unknown.
Hamiltonicity hamiltonian(const Graph& g, std::size_t guard = 24, std::uint64_t node_limit = kDefaultNodeLimit);
/// Exact search for a Hamiltonian cycle (vertex sequence starting at 0).
/// nullopt when none exists; throws GuardExceeded when the node limit is hit.
std::optional<std::vector<std::size_t>> find_hamiltonian_cycle(const Graph& g,
                                                               std::uint64_t node_limit = kDefaultNodeLimit);
bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle);

/// Exact planarity. Rejects by the Euler bound |E| > 3|V| - 6 before running
/// the Boyer-Myrvold test.
bool is_planar(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths for non-adjacent s, t.
std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t);
/// kappa(G): order - 1 for complete graphs, 0 when disconnected.
std::size_t vertex_connectivity(const Graph& g);

Bounded clique_number(const Graph& g, std::size_t guard = 200, std::uint64_t node_limit = kDefaultNodeLimit);
/// A maximum clique (best found when the search is cut short).
std::vector<std::size_t> maximum_clique(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);
Bounded chromatic_number(const Graph& g, std::size_t guard = 200, std::uint64_t node_limit = kDefaultNodeLimit);
/// Proper colouring with the given number of colours, if one exists.
/// Throws GuardExceeded when the node limit is hit.
std::optional<std::vector<std::size_t>> k_coloring(const Graph& g, std::size_t k,
                                                   std::uint64_t node_limit = kDefaultNodeLimit);
Bounded independence_number(const Graph& g, std::size_t guard = 200, std::uint64_t node_limit = kDefaultNodeLimit);
Bounded domination_number(const Graph& g, std::size_t guard = 100, std::uint64_t node_limit = kDefaultNodeLimit);
/// N[S] = V.
bool is_dominating(const Graph& g, const std::vector<std::size_t>& set);

/// Parts of a complete multipartite graph (the components of the
/// complement, each ordered by vertex index), or nullopt if g is not one.
std::optional<std::vector<std::vector<std::size_t>>> multipartite_decomposition(const Graph& g);

/// Stable colour-refinement (1-WL) colouring; colours are dense from 0 and
/// canonical up to isomorphism.
std::vector<std::size_t> refine_colors(const Graph& g);
/// Exact isomorphism test. nullopt when either order exceeds `guard` or the
/// backtracking exceeds `node_limit`.
std::optional<bool> is_isomorphic(const Graph& a, const Graph& b, std::size_t guard = 64,
                                  std::uint64_t node_limit = kDefaultNodeLimit);

}  // namespace ncg
