#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ncg/bitset.hpp"

namespace ncg {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..order-1 with packed adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges);
  static Graph complete(std::size_t order);
  static Graph cycle(std::size_t order);
  static Graph path(std::size_t order);
  /// Complete multipartite graph with the given part sizes.
  static Graph complete_multipartite(const std::vector<std::size_t>& parts);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edges_; }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Self-loops are rejected with std::invalid_argument.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);
  /// Toggles the edge {u, v}; keeps the matrix symmetric.
  void flip_edge(std::size_t u, std::size_t v);

  Graph complement() const;
  Graph induced(const std::vector<std::size_t>& vertices) const;
  /// Relabels vertex v as perm[v].
  Graph permuted(const std::vector<std::size_t>& perm) const;
  std::vector<Edge> edges() const;

  bool is_complete() const { return edges_ * 2 == order() * (order() == 0 ? 0 : order() - 1); }
  /// Symmetric with an empty diagonal.
  bool well_formed() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

}  // namespace ncg
