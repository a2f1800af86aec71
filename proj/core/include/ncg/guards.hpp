#pragma once

#include <cstddef>
#include <cstdint>

namespace ncg {

/// Budgets for exponential computations. Vertex budgets bound the graph
/// order; element budgets bound q^n for exhaustive scans of the algebra.
struct Guards {
  std::size_t clique = 200;
  std::size_t chromatic = 200;
  std::size_t independence = 200;
  std::size_t domination = 100;
  std::size_t hamiltonian = 24;
  std::size_t isomorphism = 64;
  std::uint64_t elements = 4096;
  std::uint64_t cover = 512;
  /// Search-tree nodes per exact search before it gives up with a bound.
  std::uint64_t search_nodes = 20'000'000;
};

/// Value from a search that may have stopped early. When `exact` is false
/// `value` is the best bound found (lower for clique/independence, upper for
/// colouring, domination and covers).
struct Bounded {
  long long value = 0;
  bool exact = false;

  friend bool operator==(const Bounded&, const Bounded&) = default;
};

}  // namespace ncg
