#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/graph.hpp"
#include "ncg/guards.hpp"
#include "ncg/invariants.hpp"
#include "ncg/projective.hpp"

namespace ncg {

/// Non-commuting graph: vertices are the points of P(L/Z(L)), adjacent when
/// lifted representatives have nonzero bracket.
struct NCGraph {
  CentralQuotient quotient;
  Graph graph;

  const LieAlgebra& algebra() const { return quotient.algebra(); }
  const std::vector<ProjPoint>& vertices() const { return quotient.points(); }
  int q() const { return quotient.q(); }
  std::size_t n() const { return quotient.n(); }
  std::size_t s() const { return quotient.s(); }
  std::size_t d() const { return quotient.d(); }
};

/// Throws InputError for abelian or invalid algebras.
NCGraph build_graph(const LieAlgebra& algebra);

/// (q^(n-s) - q^(r-s)) / (q - 1): degree of a vertex whose lift has an
/// r-dimensional centralizer.
std::uint64_t formula_degree(std::uint64_t q, std::size_t n, std::size_t r, std::size_t s);
/// dim C_L(x) for the lift x of every vertex.
std::vector<std::size_t> centralizer_dims(const NCGraph& g);
/// Every vertex degree matches formula_degree.
bool degree_formula_check(const NCGraph& g);

/// "(1,0,a+1)" style coordinates of a vertex.
std::string point_label(const NCGraph& g, std::size_t vertex);

struct InvariantReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degree_sequence;  // by vertex index
  bool regular = false;
  bool connected = false;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> girth;
  bool eulerian = false;
  Hamiltonicity hamiltonian = Hamiltonicity::Unknown;
  bool planar = false;
  std::size_t kappa = 0;
  Bounded clique;
  Bounded chromatic;
  Bounded independence;
  Bounded domination;
  std::optional<std::vector<std::vector<std::size_t>>> multipartite;
};

InvariantReport compute_invariants(const Graph& g, const Guards& guards = {});

nlohmann::json to_json(const InvariantReport& report);
/// Multi-line human-readable rendering with the same facts as to_json.
std::string to_text(const InvariantReport& report);

/// Undirected DOT with canonical coordinates as labels.
std::string export_dot(const NCGraph& g);
std::string export_graphml(const NCGraph& g);

}  // namespace ncg
