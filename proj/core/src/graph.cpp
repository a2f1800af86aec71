#include "ncg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

Graph::Graph(std::size_t order) : rows_(order, Bitset(order)) {}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t order) {
  Graph g(order);
  for (std::size_t u = 0; u < order; ++u) {
    for (std::size_t v = u + 1; v < order; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph Graph::cycle(std::size_t order) {
  Graph g(order);
  for (std::size_t v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
  return g;
}

Graph Graph::path(std::size_t order) {
  Graph g(order);
  for (std::size_t v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  Graph g(part_of.size());
  for (std::size_t u = 0; u < part_of.size(); ++u) {
    for (std::size_t v = u + 1; v < part_of.size(); ++v) {
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (std::size_t v = 0; v < order(); ++v) out[v] = degree(v);
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t m = order() == 0 ? 0 : order();
  for (std::size_t v = 0; v < order(); ++v) m = std::min(m, degree(v));
  return m;
}

std::size_t Graph::max_degree() const {
  std::size_t m = 0;
  for (std::size_t v = 0; v < order(); ++v) m = std::max(m, degree(v));
  return m;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edges_;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= order() || v >= order()) throw std::out_of_range("edge endpoint out of range");
  if (!rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --edges_;
}

void Graph::flip_edge(std::size_t u, std::size_t v) {
  if (adjacent(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

Graph Graph::complement() const {
  Graph g(order());
  for (std::size_t u = 0; u < order(); ++u) {
    for (std::size_t v = u + 1; v < order(); ++v) {
      if (!adjacent(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) g.add_edge(a, b);
    }
  }
  return g;
}

Graph Graph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != order()) throw std::invalid_argument("permutation size mismatch");
  Graph g(order());
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < order(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::well_formed() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < order(); ++u) {
    if (rows_[u].test(u)) return false;
    bool symmetric = true;
    rows_[u].for_each([&](std::size_t v) {
      if (!rows_[v].test(u)) symmetric = false;
    });
    if (!symmetric) return false;
    total += rows_[u].count();
  }
  return total == 2 * edges_;
}

}  // namespace ncg
