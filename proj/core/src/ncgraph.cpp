#include "ncg/ncgraph.hpp"

#include <algorithm>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {

NCGraph build_graph(const LieAlgebra& algebra) {
  CentralQuotient quotient(algebra);
  const auto& points = quotient.points();
  std::vector<Vector> lifts;
  lifts.reserve(points.size());
  for (const auto& p : points) lifts.push_back(quotient.lift(p));

  // [y, x] = 0 iff y lies in the kernel of right multiplication by x.
  Graph graph(points.size());
  for (std::size_t u = 0; u < points.size(); ++u) {
    const Matrix right = algebra.right_multiplication(lifts[u]);
    for (std::size_t v = u + 1; v < points.size(); ++v) {
      bool commutes = true;
      for (std::size_t row = 0; row < right.rows() && commutes; ++row) {
        Scalar acc = Field::zero();
        for (std::size_t col = 0; col < right.cols(); ++col) {
          acc = algebra.field().add(acc, algebra.field().mul(right.at(row, col), lifts[v][col]));
        }
        commutes = acc == Field::zero();
      }
      if (!commutes) graph.add_edge(u, v);
    }
  }
  return NCGraph{std::move(quotient), std::move(graph)};
}

std::uint64_t formula_degree(std::uint64_t q, std::size_t n, std::size_t r, std::size_t s) {
  return (saturating_pow(q, n - s) - saturating_pow(q, r - s)) / (q - 1);
}

std::vector<std::size_t> centralizer_dims(const NCGraph& g) {
  std::vector<std::size_t> dims;
  dims.reserve(g.vertices().size());
  for (const auto& p : g.vertices()) dims.push_back(centralizer(g.algebra(), g.quotient.lift(p)).dim());
  return dims;
}

bool degree_formula_check(const NCGraph& g) {
  const auto dims = centralizer_dims(g);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (g.graph.degree(v) != formula_degree(static_cast<std::uint64_t>(g.q()), g.n(), dims[v], g.s())) return false;
  }
  return true;
}

std::string point_label(const NCGraph& g, std::size_t vertex) {
  std::string out = "(";
  const auto& rep = g.vertices().at(vertex).rep;
  for (std::size_t i = 0; i < rep.size(); ++i) {
    if (i > 0) out += ',';
    out += g.algebra().field().format(rep[i]);
  }
  return out + ")";
}

InvariantReport compute_invariants(const Graph& g, const Guards& guards) {
  InvariantReport r;
  r.order = g.order();
  r.size = g.size();
  r.degree_sequence = g.degrees();
  r.regular = g.min_degree() == g.max_degree();
  r.connected = is_connected(g);
  r.diameter = diameter(g);
  r.girth = girth(g);
  r.eulerian = is_eulerian(g);
  r.hamiltonian = hamiltonian(g, guards.hamiltonian, guards.search_nodes);
  r.planar = is_planar(g);
  r.kappa = vertex_connectivity(g);
  r.clique = clique_number(g, guards.clique, guards.search_nodes);
  r.chromatic = chromatic_number(g, guards.chromatic, guards.search_nodes);
  r.independence = independence_number(g, guards.independence, guards.search_nodes);
  r.domination = domination_number(g, guards.domination, guards.search_nodes);
  r.multipartite = multipartite_decomposition(g);
  return r;
}

namespace {

nlohmann::json bounded_json(const Bounded& b) { return {{"value", b.value}, {"exact", b.exact}}; }

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string bounded_text(const Bounded& b) { return std::to_string(b.value) + (b.exact ? "" : " (bound)"); }

template <typename T>
std::string optional_text(const std::optional<T>& v, const char* none) {
  return v ? std::to_string(*v) : std::string(none);
}

}  // namespace

nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["size"] = r.size;
  j["degree_sequence"] = r.degree_sequence;
  j["regular"] = r.regular;
  j["connected"] = r.connected;
  j["diameter"] = optional_json(r.diameter);
  j["girth"] = optional_json(r.girth);
  j["eulerian"] = r.eulerian;
  j["hamiltonian"] = std::string(to_string(r.hamiltonian));
  j["planar"] = r.planar;
  j["kappa"] = r.kappa;
  j["clique_number"] = bounded_json(r.clique);
  j["chromatic_number"] = bounded_json(r.chromatic);
  j["independence_number"] = bounded_json(r.independence);
  j["domination_number"] = bounded_json(r.domination);
  j["multipartite"] = optional_json(r.multipartite);
  return j;
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  const auto [lo, hi] = std::minmax_element(r.degree_sequence.begin(), r.degree_sequence.end());
  out << "order: " << r.order << "\n";
  out << "size: " << r.size << "\n";
  out << "degrees: ";
  if (r.degree_sequence.empty()) {
    out << "-";
  } else if (r.regular) {
    out << *lo << "-regular";
  } else {
    out << "min " << *lo << ", max " << *hi;
  }
  out << "\n";
  out << "connected: " << (r.connected ? "yes" : "no") << "\n";
  out << "diameter: " << optional_text(r.diameter, "none") << "\n";
  out << "girth: " << optional_text(r.girth, "none") << "\n";
  out << "eulerian: " << (r.eulerian ? "yes" : "no") << "\n";
  out << "hamiltonian: " << to_string(r.hamiltonian) << "\n";
  out << "planar: " << (r.planar ? "yes" : "no") << "\n";
  out << "kappa: " << r.kappa << "\n";
  out << "clique number: " << bounded_text(r.clique) << "\n";
  out << "chromatic number: " << bounded_text(r.chromatic) << "\n";
  out << "independence number: " << bounded_text(r.independence) << "\n";
  out << "domination number: " << bounded_text(r.domination) << "\n";
  out << "multipartite: ";
  if (r.multipartite) {
    std::vector<std::size_t> sizes;
    for (const auto& part : *r.multipartite) sizes.push_back(part.size());
    out << r.multipartite->size() << " parts, sizes";
    for (auto s : sizes) out << ' ' << s;
  } else {
    out << "no";
  }
  out << "\n";
  return out.str();
}

}  // namespace ncg
