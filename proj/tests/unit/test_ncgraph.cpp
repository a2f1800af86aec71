#include <map>
#include <set>

#include "doctest.h"
#include "ncg/catalog.hpp"
#include "ncg/error.hpp"
#include "ncg/ncgraph.hpp"
#include "oracle.hpp"

using namespace ncg;

namespace {

oracle::PrimeAlgebra raw(const LieAlgebra& L) {
  oracle::PrimeAlgebra r{L.field().p(), L.dim(), {}};
  for (auto s : L.tensor()) r.c.push_back(s.code);
  return r;
}

Vector vec(const std::vector<int>& v) {
  Vector out;
  for (int x : v) out.push_back(Scalar{static_cast<std::uint16_t>(x)});
  return out;
}

void same_as_naive(const LieAlgebra& L) {
  auto g = build_graph(L);
  auto naive = oracle::naive_graph(raw(L));
  REQUIRE(g.graph.order() == naive.reps.size());
  std::vector<std::size_t> map;
  std::set<std::size_t> hit;
  for (auto& r : naive.reps) {
    auto i = g.quotient.locate(vec(r));
    REQUIRE(i);
    map.push_back(*i);
    hit.insert(*i);
  }
  CHECK(hit.size() == map.size());
  for (std::size_t a = 0; a < map.size(); ++a)
    for (std::size_t b = 0; b < map.size(); ++b) CHECK(g.graph.adjacent(map[a], map[b]) == naive.adj[a][b]);
  CHECK(g.quotient.center().cardinality() == naive.center_size);
}

}  // namespace

TEST_CASE("graph matches a first-principles construction") {
  for (int p : {2, 3, 5})
    for (auto name : {"heisenberg", "affine2", "sl2", "gl2"}) {
      CAPTURE(p);
      CAPTURE(name);
      same_as_naive(builtin(name, default_field_spec(p)));
    }
  auto h = heisenberg(default_field_spec(2));
  same_as_naive(direct_sum(h, affine2(default_field_spec(2))));
}

TEST_CASE("degree formula") {
  CHECK(formula_degree(2, 3, 2, 1) == 2);
  CHECK(formula_degree(5, 3, 1, 0) == 30);
  for (int q : {2, 3, 4, 5, 7})
    for (auto& name : builtin_names()) {
      if (name.rfind("paper_", 0) == 0 && q != 2) continue;
      auto g = build_graph(builtin(name, default_field_spec(q)));
      CHECK(degree_formula_check(g));
      auto dims = centralizer_dims(g);
      for (std::size_t v = 0; v < g.graph.order(); ++v)
        CHECK(g.graph.degree(v) == formula_degree(q, g.n(), dims[v], g.s()));
    }
}

TEST_CASE("explicit instances") {
  auto k3 = build_graph(heisenberg(default_field_spec(2)));
  CHECK(k3.graph == Graph::complete(3));
  auto k4 = build_graph(affine2(default_field_spec(3)));
  CHECK(k4.graph == Graph::complete(4));
  auto k5 = build_graph(affine2(default_field_spec(4)));
  CHECK(k5.graph == Graph::complete(5));
  auto s = build_graph(sl2(default_field_spec(5)));
  CHECK(s.graph.order() == 31);
  CHECK(s.graph.is_complete());
}

TEST_CASE("invariant report") {
  auto g = build_graph(sl2(default_field_spec(3)));
  auto r = compute_invariants(g.graph);
  auto a = oracle::adjacency(g.graph);
  CHECK(r.order == 13);
  CHECK(r.clique.exact);
  CHECK(static_cast<std::size_t>(r.clique.value) == oracle::clique(a));
  CHECK(static_cast<std::size_t>(r.domination.value) == oracle::domination(a));
  CHECK(static_cast<std::size_t>(r.independence.value) == oracle::independence(a));
  auto j = to_json(r);
  CHECK(j["order"] == 13);
  CHECK(j["chromatic_number"]["value"] == r.chromatic.value);
  CHECK_FALSE(to_text(r).empty());
}

TEST_CASE("labels and exports") {
  auto g = build_graph(heisenberg(default_field_spec(4)));
  CHECK(point_label(g, 0) == "(1,0)");
  bool saw_a = false;
  for (std::size_t v = 0; v < g.graph.order(); ++v) saw_a = saw_a || point_label(g, v).find('a') != std::string::npos;
  CHECK(saw_a);
  auto dot = export_dot(g);
  CHECK(dot == export_dot(build_graph(heisenberg(default_field_spec(4)))));
  CHECK(dot.rfind("graph ncg {", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == g.graph.size());
  CHECK(export_graphml(g).find("<graphml") != std::string::npos);
}

TEST_CASE("abelian input") {
  auto f = std::make_shared<const Field>(Field::of_order(3));
  CHECK_THROWS_AS(build_graph(LieAlgebra(f, 3, std::vector<Scalar>(27))), InputError);
}
