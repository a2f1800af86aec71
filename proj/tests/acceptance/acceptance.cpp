// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Optional argument: path to the ncgraph executable for the end-to-end
// determinism run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncg/catalog.hpp"
#include "ncg/census.hpp"
#include "ncg/invariants.hpp"
#include "ncg/ncgraph.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

struct Sample {
  std::string label;
  LieAlgebra algebra;
};

std::vector<Sample> census_samples(std::size_t dim, int q) {
  std::vector<Sample> out;
  enumerate_brackets(dim, default_field_spec(q), true, [&](std::uint64_t code, const LieAlgebra& L) {
    out.push_back({"dim" + std::to_string(dim) + "/F" + std::to_string(q) + "#" + std::to_string(code), L});
  });
  return out;
}

// Every valid non-abelian algebra of dim <= 3 over F2, and of dim 2 over F3.
const std::vector<Sample>& census() {
  static const std::vector<Sample> all = [] {
    std::vector<Sample> v;
    for (auto [dim, q] : {std::pair<std::size_t, int>{2, 2}, {3, 2}, {2, 3}}) {
      auto part = census_samples(dim, q);
      v.insert(v.end(), part.begin(), part.end());
    }
    return v;
  }();
  return all;
}

std::vector<Sample> catalog(std::initializer_list<int> qs) {
  std::vector<Sample> out;
  for (int q : qs)
    for (auto& name : builtin_names()) {
      if (name.rfind("paper_", 0) == 0 && q != 2) continue;
      out.push_back({name + "/F" + std::to_string(q), builtin(name, default_field_spec(q))});
    }
  return out;
}

// Dimension of C_L(x) / Z(L) for the lift of every vertex.
std::vector<std::size_t> quotient_centralizer_dims(const NCGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.graph.order(); ++v)
    out.push_back(centralizer(g.algebra(), g.quotient.lift(v)).dim() - g.s());
  return out;
}

// Vertices whose lifts lie in the subspace.
std::vector<std::size_t> points_in(const NCGraph& g, const Subspace& s) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.graph.order(); ++v)
    if (s.member(g.quotient.lift(v))) out.push_back(v);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome closed_form_counts() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto algebras = catalog({2, 3, 4, 5});
  std::size_t vertices = 0;
  for (auto& [label, L] : algebras) {
    auto g = build_graph(L);
    const std::size_t s = center(L).dim(), n = L.dim();
    o.expect(g.graph.order() == projective_point_count(L.field().q(), n - s), label + ": vertex count");
    const std::uint64_t q = L.field().q();
    for (std::size_t v = 0; v < g.graph.order(); ++v) {
      const std::size_t r = centralizer(L, g.quotient.lift(v)).dim();
      // q^(r-s) (1 + q + ... + q^(n-r-1))
      std::uint64_t geometric = 0, power = 1;
      for (std::size_t i = 0; i + r < n; ++i, power *= q) geometric += power;
      std::uint64_t expected = geometric;
      for (std::size_t i = s; i < r; ++i) expected *= q;
      o.expect(g.graph.degree(v) == expected, label + ": degree of vertex " + std::to_string(v));
    }
    vertices += g.graph.order();
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  o.note = std::to_string(algebras.size()) + " catalog algebras, " + std::to_string(vertices) + " vertices";
  return o;
}

Outcome structural() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  for (auto& [label, L] : census()) {
    const Graph G = build_graph(L).graph;
    const std::size_t n = G.order();
    o.expect(is_connected(G), label + ": disconnected");
    auto d = diameter(G);
    o.expect(d && (*d == 1 || *d == 2), label + ": diameter");
    o.expect(girth(G) == std::optional<std::size_t>(3), label + ": girth");
    o.expect(2 * G.min_degree() > n, label + ": Dirac bound");
    auto cycle = find_hamiltonian_cycle(G);
    o.expect(cycle && is_hamiltonian_cycle(G, *cycle), label + ": no Hamiltonian cycle");
    if (L.field().q() == 2) o.expect(is_eulerian(G), label + ": not Eulerian");
    o.expect(vertex_connectivity(G) >= 2, label + ": kappa < 2");
  }
  const double secs = seconds_since(t0);
  o.expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  o.note = std::to_string(census().size()) + " census algebras";
  return o;
}

Outcome planarity() {
  Outcome o;
  std::vector<Sample> samples = census();
  for (int q : {2, 3, 4, 5}) {
    samples.push_back({"affine2/F" + std::to_string(q), affine2(default_field_spec(q))});
    samples.push_back({"heisenberg/F" + std::to_string(q), heisenberg(default_field_spec(q))});
  }
  std::size_t planar = 0;
  for (auto& [label, L] : samples) {
    auto g = build_graph(L);
    const bool predicted = (g.q() == 2 || g.q() == 3) && g.d() == 2;
    const bool actual = is_planar(g.graph);
    planar += actual;
    o.expect(actual == predicted, label + ": planarity mismatch");
  }
  auto k4 = build_graph(affine2(default_field_spec(3))).graph;
  auto k5 = build_graph(affine2(default_field_spec(4))).graph;
  o.expect(k4 == Graph::complete(4) && is_planar(k4), "affine2/F3 should be planar K4");
  o.expect(k5 == Graph::complete(5) && !is_planar(k5), "affine2/F4 should be non-planar K5");
  o.note = std::to_string(samples.size()) + " algebras, " + std::to_string(planar) + " planar";
  return o;
}

Outcome completeness_regularity() {
  Outcome o;
  std::size_t complete = 0, regular = 0;
  for (auto& [label, L] : census()) {
    auto g = build_graph(L);
    const auto dims = quotient_centralizer_dims(g);
    // Algebra side: every centralizer is span{x} + Z; all centralizers equal in dimension.
    const bool lines = std::all_of(dims.begin(), dims.end(), [](std::size_t k) { return k == 1; });
    const bool equal_dims = std::adjacent_find(dims.begin(), dims.end(), std::not_equal_to<>()) == dims.end();
    // Graph side from adjacency alone.
    const bool is_complete = g.graph.is_complete();
    const bool is_regular = g.graph.min_degree() == g.graph.max_degree();
    o.expect(is_complete == lines, label + ": completeness biconditional");
    o.expect(is_regular == equal_dims, label + ": regularity biconditional");
    complete += is_complete;
    regular += is_regular;
  }
  o.note = std::to_string(complete) + " complete, " + std::to_string(regular) + " regular of " +
           std::to_string(census().size());
  return o;
}

Outcome chromatic_cover() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (auto& [label, L] : census()) {
    if (L.field().q() != 2) continue;
    const auto chi = chromatic_number(build_graph(L).graph);
    const auto cover = min_abelian_cover(L);
    o.expect(chi.exact && cover && cover->exact && chi.value == cover->value, label + ": chi differs from cover");
    ++checked;
  }
  const auto h = heisenberg(default_field_spec(2));
  const auto hc = min_abelian_cover(h);
  const auto hchi = chromatic_number(build_graph(h).graph);
  o.expect(hc && *hc == Bounded{3, true} && hchi == Bounded{3, true}, "heisenberg/F2 should give 3 = 3");
  const double secs = seconds_since(t0);
  o.expect(secs < 300.0, "runtime " + std::to_string(secs) + " s");
  o.note = std::to_string(checked) + " algebras over F2, heisenberg/F2 " + std::to_string(hchi.value) + " = " +
           std::to_string(hc ? hc->value : -1);
  return o;
}

// Parts of a complete multipartite graph must be the point sets of C_L(x)/Z(L).
bool parts_are_centralizers(const NCGraph& g, const std::vector<std::vector<std::size_t>>& parts) {
  for (auto& part : parts)
    for (auto v : part)
      if (points_in(g, centralizer(g.algebra(), g.quotient.lift(v))) != part) return false;
  return true;
}

Outcome ct_ac() {
  Outcome o;
  const auto sl = sl2(default_field_spec(5));
  const auto gs = build_graph(sl);
  o.expect(is_ct(sl) == std::optional<bool>(true), "sl2/F5 not CT");
  o.expect(gs.s() == 0, "sl2/F5 has a center");
  o.expect(gs.graph.order() == 31 && gs.graph.is_complete(), "sl2/F5 graph is not K31");
  o.expect(gs.graph.min_degree() == 30 && gs.graph.max_degree() == 30, "sl2/F5 not 30-regular");
  o.expect(multipartite_decomposition(gs.graph).has_value(), "sl2/F5 graph not complete multipartite");

  for (int q : {2, 3}) {
    const auto h = heisenberg(default_field_spec(q));
    const auto g = build_graph(h);
    const auto parts = multipartite_decomposition(g.graph);
    o.expect(is_ac(h) == std::optional<bool>(true), "heisenberg/F" + std::to_string(q) + " not AC");
    o.expect(parts && parts_are_centralizers(g, *parts), "heisenberg/F" + std::to_string(q) + " parts");
  }

  std::size_t ac = 0, ct = 0;
  for (auto& [label, L] : census()) {
    const auto g = build_graph(L);
    const auto is_ac_alg = is_ac(L);
    const auto is_ct_alg = is_ct(L);
    const auto parts = multipartite_decomposition(g.graph);
    o.expect(is_ac_alg && is_ct_alg, label + ": CT/AC not computed");
    if (!is_ac_alg || !is_ct_alg) continue;
    o.expect(*is_ct_alg == (parts.has_value() && g.s() == 0), label + ": CT characterization");
    o.expect(*is_ac_alg == (parts.has_value() && parts_are_centralizers(g, *parts)), label + ": AC characterization");
    if (*is_ac_alg) {
      const auto w = clique_number(g.graph), chi = chromatic_number(g.graph);
      o.expect(w.exact && chi.exact && w.value == chi.value, label + ": omega differs from chi");
      ++ac;
    }
    ct += *is_ct_alg;
  }
  o.note = "sl2/F5 CT on K31; " + std::to_string(ac) + " AC and " + std::to_string(ct) + " CT census algebras";
  return o;
}

Outcome graph_isomorphic_pair() {
  Outcome o;
  const auto cmp = compare_algebras(paper_L1(), paper_L2());
  o.expect(cmp.graphs_isomorphic == std::optional<bool>(true), "graphs not isomorphic");
  o.expect(cmp.class_a == std::optional<std::size_t>(2), "L1 should be nilpotent of class 2");
  o.expect(!cmp.class_b.has_value(), "L2 should not be nilpotent");
  o.expect(cmp.distinct_algebras_same_graph(), "pair not flagged");
  o.expect(cmp.order_a == 3 && cmp.order_b == 3, "expected 3 vertices each");
  o.note = cmp.verdict() + "; " + std::to_string(cmp.order_a) +
           " vertices each (one per projective point; a count over elements would give 6)";
  return o;
}

Outcome domination() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t subsets = 0;
  for (auto& [label, L] : census()) {
    const auto g = build_graph(L);
    const Graph& G = g.graph;
    const std::size_t n = G.order();
    const auto dims = quotient_centralizer_dims(g);
    for (std::size_t v = 0; v < n; ++v)
      o.expect(is_dominating(G, {v}) == (dims[v] == 1), label + ": singleton criterion at " + std::to_string(v));
    for (int t = 0; t < 64; ++t) {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), rng);
      all.resize(1 + rng() % n);
      std::sort(all.begin(), all.end());
      std::vector<Vector> lifts;
      for (auto v : all) lifts.push_back(g.quotient.lift(v));
      // S dominates iff every point commuting with all of S lies in S.
      const auto common = points_in(g, centralizer_of_set(L, lifts));
      const bool criterion = std::includes(all.begin(), all.end(), common.begin(), common.end());
      o.expect(is_dominating(G, all) == criterion, label + ": subset criterion");
      ++subsets;
    }
    std::vector<std::size_t> basis;
    const auto Z = center(L);
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (!Z.member(L.basis_vector(i))) basis.push_back(*g.quotient.locate(L.basis_vector(i)));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    const auto gamma = domination_number(G);
    o.expect(is_dominating(G, basis), label + ": basis does not dominate");
    o.expect(gamma.exact && static_cast<std::size_t>(gamma.value) <= basis.size(), label + ": basis bound");
    VerifyConfig cfg;
    cfg.trials = 64;
    o.expect(run_check(g, "dominating_criterion", cfg).status == Status::Pass, label + ": harness check");
  }
  const auto sl = build_graph(sl2(default_field_spec(5)));
  const auto h = sl.quotient.locate(sl.algebra().basis_vector(0));
  o.expect(h && is_dominating(sl.graph, {*h}), "[h] does not dominate sl2/F5");
  o.expect(domination_number(sl.graph) == Bounded{1, true}, "gamma(sl2/F5) != 1");
  o.note = std::to_string(census().size()) + " census algebras, " + std::to_string(subsets) +
           " random subsets; gamma(sl2/F5) = 1";
  return o;
}

std::string run_cli(const std::string& cli, const std::string& args, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((cli + " " + args).c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[1 << 15];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
  status = pclose(pipe.release());
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  VerifyConfig cfg;
  const auto a = census_report_jsonl(verify_census(3, default_field_spec(2), cfg, 1));
  const auto b = census_report_jsonl(verify_census(3, default_field_spec(2), cfg, 2));
  o.expect(a == b, "in-process census reports differ");
  o.note = "in-process reports identical (" + std::to_string(a.size()) + " bytes)";
  if (!cli.empty()) {
    int s1 = 0, s2 = 0;
    const std::string args = "verify --census dim=3 q=2 --seed 0 --json";
    const auto r1 = run_cli(cli, args, s1);
    const auto r2 = run_cli(cli, args, s2);
    o.expect(s1 == 0 && s2 == 0, "ncgraph exited with an error");
    o.expect(!r1.empty() && r1 == r2, "ncgraph reports differ");
    o.expect(r1 == a, "ncgraph report differs from the in-process report");
    o.note += "; two ncgraph runs identical";
  }
  return o;
}

Outcome mutation() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::vector<Sample> samples = catalog({2, 3, 5});
  for (std::size_t i = 0; i < census().size(); i += 17) samples.push_back(census()[i]);
  std::size_t caught = 0;
  for (auto& [label, L] : samples) {
    auto g = build_graph(L);
    const std::size_t n = g.graph.order();
    const std::size_t u = rng() % n;
    std::size_t v = rng() % (n - 1);
    if (v >= u) ++v;
    g.graph.flip_edge(u, v);
    const auto report = verify_all(g);
    bool revalidated = false;
    for (auto& c : report.checks)
      if (c.status == Status::Fail) revalidated = revalidated || revalidate(g, c);
    o.expect(report.failed(), label + ": flip {" + std::to_string(u) + "," + std::to_string(v) + "} not detected");
    o.expect(revalidated, label + ": no failure witness revalidates");
    caught += report.failed() && revalidated;
  }
  o.note = std::to_string(caught) + " of " + std::to_string(samples.size()) + " single-bit mutations caught";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form vertex counts and degrees", closed_form_counts},
      {"connectivity, diameter, girth, Dirac, Euler, kappa on the census", structural},
      {"planarity biconditional", planarity},
      {"completeness and regularity biconditionals", completeness_regularity},
      {"chromatic number equals minimum abelian cover", chromatic_cover},
      {"CT and AC characterizations", ct_ac},
      {"isomorphic graphs from non-isomorphic algebras", graph_isomorphic_pair},
      {"domination criteria", domination},
      {"deterministic census reports", [&] { return determinism(cli); }},
      {"single-bit mutation is detected", mutation},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " [" << o.note << ", "
              << secs << "]\n";
    for (auto& p : o.problems) std::cout << "        " << p << "\n";
    failures += !o.ok;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
