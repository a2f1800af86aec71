#include "ncg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ncg/error.hpp"

namespace ncg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::NotComputed: return "not-computed";
  }
  return "not-computed";
}

std::size_t TheoremReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::size_t CensusVerification::count(Status s) const {
  std::size_t total = 0;
  for (const auto& r : reports) total += r.count(s);
  for (const auto& c : pair_checks) total += c.status == s ? 1 : 0;
  return total;
}

namespace {

using json = nlohmann::json;

CheckResult pass(std::string detail = {}) { return {{}, Status::Pass, std::move(detail), nullptr, 0.0}; }
CheckResult fail(std::string detail, json witness) {
  return {{}, Status::Fail, std::move(detail), std::move(witness), 0.0};
}
CheckResult not_applicable(std::string detail) { return {{}, Status::NotApplicable, std::move(detail), nullptr, 0.0}; }
CheckResult not_computed(std::string detail) { return {{}, Status::NotComputed, std::move(detail), nullptr, 0.0}; }

json codes(std::span<const Scalar> v) {
  json a = json::array();
  for (Scalar s : v) a.push_back(s.code);
  return a;
}

Vector from_codes(const json& a) {
  Vector v;
  for (const auto& x : a) v.push_back(Scalar{x.get<std::uint16_t>()});
  return v;
}

std::vector<std::size_t> members(const Bitset& b) {
  std::vector<std::size_t> out;
  b.for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

class Context {
 public:
  Context(const NCGraph& graph, const VerifyConfig& config)
      : g(graph), cfg(config), L(graph.algebra()), G(graph.graph), cents_(graph.vertices().size()) {
    for (const auto& p : g.vertices()) lifts.push_back(g.quotient.lift(p));
  }

  const NCGraph& g;
  const VerifyConfig& cfg;
  const LieAlgebra& L;
  const Graph& G;
  std::vector<Vector> lifts;

  const Subspace& center() const { return g.quotient.center(); }

  const Subspace& cent(std::size_t v) {
    if (!cents_[v]) cents_[v] = centralizer(L, lifts[v]);
    return *cents_[v];
  }

  Subspace line_plus_center(std::size_t v) const {
    return Subspace::span(L.field_ptr(), L.dim(), {lifts[v]}).sum(center());
  }

  bool commute(std::span<const Scalar> a, std::span<const Scalar> b) const { return is_zero(L.bracket(a, b)); }

  const InvariantReport& inv() {
    if (!inv_) inv_ = compute_invariants(G, cfg.guards);
    return *inv_;
  }

  const SeriesData& ser() {
    if (!ser_) ser_ = series(L);
    return *ser_;
  }

  std::optional<bool> ac() {
    if (!ac_done_) {
      ac_ = is_ac(L, cfg.guards.elements);
      ac_done_ = true;
    }
    return ac_;
  }

  std::mt19937_64 rng(std::uint64_t salt) {
    const std::uint64_t fp = std::stoull(fingerprint(L), nullptr, 16);
    return std::mt19937_64(cfg.seed * 0x9E3779B97F4A7C15ULL ^ fp ^ salt);
  }

  /// Vertices whose lifts lie in s.
  Bitset points_in(const Subspace& s) const {
    Bitset out(lifts.size());
    for (std::size_t v = 0; v < lifts.size(); ++v) {
      if (s.member(lifts[v])) out.set(v);
    }
    return out;
  }

 private:
  std::vector<std::optional<Subspace>> cents_;
  std::optional<InvariantReport> inv_;
  std::optional<SeriesData> ser_;
  std::optional<bool> ac_;
  bool ac_done_ = false;
};

CheckResult adjacency_bracket(Context& c) {
  const std::size_t n = c.lifts.size();
  if (c.G.order() != n) {
    return fail("graph order differs from the number of projective points", {{"order", c.G.order()}, {"points", n}});
  }
  if (!c.G.well_formed()) return fail("adjacency is not symmetric and irreflexive", {{"well_formed", false}});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool nonzero = !c.commute(c.lifts[u], c.lifts[v]);
      if (nonzero != c.G.adjacent(u, v)) {
        return fail("adjacency disagrees with the bracket of canonical lifts",
                    {{"u", u}, {"v", v}, {"adjacent", c.G.adjacent(u, v)}, {"bracket_nonzero", nonzero}});
      }
    }
  }
  if (n < 2) return pass("fewer than two vertices");

  // Representatives lambda * lift + z must give the same answer.
  const Field& f = c.L.field();
  auto rng = c.rng(0xAD1ACE);
  const auto zbasis = c.center().basis_vectors();
  auto random_rep = [&](std::size_t v) {
    Vector x = scale(f, Scalar{static_cast<std::uint16_t>(1 + rng() % static_cast<std::uint64_t>(f.q() - 1))}, c.lifts[v]);
    for (const auto& z : zbasis) {
      x = add(f, x, scale(f, Scalar{static_cast<std::uint16_t>(rng() % static_cast<std::uint64_t>(f.q()))}, z));
    }
    return x;
  };
  for (std::size_t t = 0; t < c.cfg.adjacency_samples; ++t) {
    const std::size_t u = rng() % n;
    std::size_t v = rng() % (n - 1);
    if (v >= u) ++v;
    const Vector x = random_rep(u);
    const Vector y = random_rep(v);
    const bool nonzero = !c.commute(x, y);
    if (nonzero != c.G.adjacent(u, v)) {
      return fail("adjacency disagrees with the bracket of other representatives",
                  {{"u", u}, {"v", v}, {"x", codes(x)}, {"y", codes(y)}, {"adjacent", c.G.adjacent(u, v)},
                   {"bracket_nonzero", nonzero}});
    }
  }
  return pass(std::to_string(n * (n - 1) / 2) + " lift pairs, " + std::to_string(c.cfg.adjacency_samples) +
              " random representative pairs");
}

CheckResult vertex_count_degree_formula(Context& c) {
  const auto q = static_cast<std::uint64_t>(c.g.q());
  const std::uint64_t expected = projective_point_count(q, c.g.n() - c.g.s());
  if (c.G.order() != expected) {
    return fail("vertex count differs from (q^(n-s) - 1)/(q - 1)", {{"order", c.G.order()}, {"expected", expected}});
  }
  for (std::size_t v = 0; v < c.G.order(); ++v) {
    const std::size_t r = c.cent(v).dim();
    const std::uint64_t want = formula_degree(q, c.g.n(), r, c.g.s());
    if (c.G.degree(v) != want) {
      return fail("degree differs from (q^(n-s) - q^(r-s))/(q - 1)",
                  {{"vertex", v}, {"degree", c.G.degree(v)}, {"expected", want}, {"r", r}});
    }
  }
  return pass(std::to_string(expected) + " vertices, all degrees match");
}

CheckResult regularity_centralizer_dims(Context& c) {
  const std::size_t n = c.G.order();
  std::optional<std::size_t> deg_u, dim_u;
  for (std::size_t v = 1; v < n; ++v) {
    if (!deg_u && c.G.degree(v) != c.G.degree(0)) deg_u = v;
    if (!dim_u && c.cent(v).dim() != c.cent(0).dim()) dim_u = v;
  }
  const bool regular = !deg_u;
  const bool equal_dims = !dim_u;
  if (regular == equal_dims) return pass(regular ? "regular, equal centralizer dimensions" : "irregular, unequal centralizer dimensions");
  if (regular) {
    return fail("regular graph but centralizer dimensions differ",
                {{"u", 0}, {"v", *dim_u}, {"dim_u", c.cent(0).dim()}, {"dim_v", c.cent(*dim_u).dim()}});
  }
  return fail("equal centralizer dimensions but the graph is not regular",
              {{"u", 0}, {"v", *deg_u}, {"degree_u", c.G.degree(0)}, {"degree_v", c.G.degree(*deg_u)}});
}

CheckResult complete_iff_line_centralizers(Context& c) {
  const bool complete = c.G.is_complete();
  std::optional<std::size_t> fat;
  for (std::size_t v = 0; v < c.G.order() && !fat; ++v) {
    if (!(c.cent(v) == c.line_plus_center(v))) fat = v;
  }
  if (complete == !fat) return pass(complete ? "complete, every centralizer is span{x} + Z" : "not complete, some centralizer is larger");
  if (complete) {
    const std::size_t v = *fat;
    const Subspace small = c.line_plus_center(v);
    Vector extra;
    for (const auto& b : c.cent(v).basis_vectors()) {
      if (!small.member(b)) {
        extra = b;
        break;
      }
    }
    return fail("complete graph but a centralizer exceeds span{x} + Z", {{"vertex", v}, {"element", codes(extra)}});
  }
  for (std::size_t u = 0; u < c.G.order(); ++u) {
    for (std::size_t v = u + 1; v < c.G.order(); ++v) {
      if (!c.G.adjacent(u, v)) {
        return fail("every centralizer is span{x} + Z but the graph is not complete", {{"u", u}, {"v", v}});
      }
    }
  }
  return fail("every centralizer is span{x} + Z but the graph is not complete", nullptr);
}

CheckResult diameter_girth(Context& c) {
  const std::size_t n = c.G.order();
  if (n < 2) return not_applicable("fewer than two vertices");
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = bfs_distances(c.G, u);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] == kUnreachable) return fail("graph is disconnected", {{"u", u}, {"v", v}, {"distance", nullptr}});
      if (dist[v] > 2) return fail("distance exceeds 2", {{"u", u}, {"v", v}, {"distance", dist[v]}});
    }
  }
  const auto gi = girth(c.G);
  if (gi != std::size_t{3}) return fail("girth is not 3", {{"girth", gi ? json(*gi) : json(nullptr)}});
  return pass("connected, diameter " + std::to_string(c.G.is_complete() ? 1 : 2) + ", girth 3");
}

CheckResult hamiltonian_check(Context& c) {
  const std::size_t n = c.G.order();
  if (n < 3) return not_applicable("fewer than three vertices");
  std::size_t low = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (c.G.degree(v) < c.G.degree(low)) low = v;
  }
  if (!dirac_condition(c.G)) {
    return fail("minimum degree is not above half the order", {{"vertex", low}, {"degree", c.G.degree(low)}, {"order", n}});
  }
  if (n > c.cfg.guards.hamiltonian) return pass("Dirac bound holds");
  try {
    const auto cycle = find_hamiltonian_cycle(c.G, c.cfg.guards.search_nodes);
    if (!cycle || !is_hamiltonian_cycle(c.G, *cycle)) {
      return fail("Dirac bound holds but the exhaustive search found no Hamiltonian cycle", {{"order", n}});
    }
  } catch (const GuardExceeded&) {
    return pass("Dirac bound holds; cycle search exceeded its budget");
  }
  return pass("Dirac bound holds and a Hamiltonian cycle was found");
}

CheckResult eulerian_check(Context& c) {
  const std::size_t n = c.G.order();
  std::string hypothesis;
  if (c.g.q() == 2) {
    hypothesis = "q = 2";
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      if ((c.g.n() - c.cent(v).dim()) % 2 != 0) {
        return not_applicable("q = " + std::to_string(c.g.q()) + " and vertex " + std::to_string(v) +
                              " has a centralizer of odd codimension");
      }
    }
    hypothesis = "every centralizer has even codimension";
  }
  if (!is_connected(c.G)) return fail(hypothesis + " but the graph is disconnected", {{"connected", false}});
  for (std::size_t v = 0; v < n; ++v) {
    if (c.G.degree(v) % 2 != 0) {
      return fail(hypothesis + " but a vertex has odd degree", {{"vertex", v}, {"degree", c.G.degree(v)}});
    }
  }
  return pass(hypothesis + ", Eulerian");
}

CheckResult kappa_check(Context& c) {
  const std::size_t kappa = c.inv().kappa;
  if (kappa >= 2) return pass("kappa = " + std::to_string(kappa));
  if (!is_connected(c.G)) return fail("graph is disconnected", {{"kappa", kappa}});
  for (std::size_t v = 0; v < c.G.order(); ++v) {
    std::vector<std::size_t> rest;
    for (std::size_t u = 0; u < c.G.order(); ++u) {
      if (u != v) rest.push_back(u);
    }
    if (!is_connected(c.G.induced(rest))) return fail("a single vertex separates the graph", {{"kappa", kappa}, {"cut_vertex", v}});
  }
  return fail("vertex connectivity is below 2", {{"kappa", kappa}});
}

CheckResult planarity_classification(Context& c) {
  const bool planar = c.inv().planar;
  const int q = c.g.q();
  const bool predicted = (q == 2 || q == 3) && c.g.d() == 2;
  const bool quotient_abelian = c.center().contains(bracket_span(c.L, Subspace::full(c.L.field_ptr(), c.L.dim()),
                                                                 Subspace::full(c.L.field_ptr(), c.L.dim())));
  const std::string shape = std::string(quotient_abelian ? "abelian" : "non-abelian") + " L/Z of dimension " +
                            std::to_string(c.g.d()) + " over F_" + std::to_string(q);
  if (planar == predicted) return pass(std::string(planar ? "planar, " : "non-planar, ") + shape);
  return fail(std::string(planar ? "planar" : "non-planar") + " graph contradicts the classification for " + shape,
              {{"planar", planar}, {"q", q}, {"d", c.g.d()}, {"vertices", c.G.order()}, {"edges", c.G.size()}});
}

CheckResult regular_nilpotent_class(Context& c) {
  const auto& s = c.ser();
  if (!s.nilpotent()) return not_applicable("algebra is not nilpotent");
  const bool regular = c.inv().regular;
  const std::size_t cls = *s.nilpotency_class;
  if (!regular) return pass("graph is not regular; nilpotency class " + std::to_string(cls));
  if (cls <= 3) return pass("regular graph, nilpotency class " + std::to_string(cls));
  return fail("regular graph but nilpotency class exceeds 3", {{"class", cls}});
}

// A maximal independent set grown greedily from `seed` in index order.
Bitset grow_independent(const Graph& g, std::size_t seed) {
  Bitset m(g.order());
  m.set(seed);
  Bitset blocked = g.neighbors(seed);
  blocked.set(seed);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (blocked.test(v)) continue;
    m.set(v);
    blocked |= g.neighbors(v);
    blocked.set(v);
  }
  return m;
}

CheckResult max_independent_abelian(Context& c) {
  if (c.L.cardinality() > c.cfg.guards.elements) return not_computed("q^n exceeds the element guard");
  const std::size_t n = c.G.order();
  const std::size_t seeds = std::min<std::size_t>(n, 64);
  const Subspace whole = Subspace::full(c.L.field_ptr(), c.L.dim());
  for (std::size_t s = 0; s < seeds; ++s) {
    const Bitset m = grow_independent(c.G, s);
    const auto set = members(m);
    std::vector<Vector> gens = c.center().basis_vectors();
    for (auto v : set) gens.push_back(c.lifts[v]);
    const Subspace a = Subspace::span(c.L.field_ptr(), c.L.dim(), gens);
    if (!is_abelian_subspace(c.L, a)) {
      for (auto u : set) {
        for (auto v : set) {
          if (u < v && !c.commute(c.lifts[u], c.lifts[v])) {
            return fail("maximal independent set spans a non-abelian subspace", {{"set", set}, {"u", u}, {"v", v}});
          }
        }
      }
      return fail("maximal independent set spans a non-abelian subspace", {{"set", set}});
    }
    const Bitset inside = c.points_in(a);
    if (!(inside == m)) {
      Bitset extra = inside;
      extra.subtract(m);
      return fail("span of the set and the center contains other vertices", {{"set", set}, {"vertex", extra.find_first()}});
    }
    const auto basis = a.basis_vectors();
    std::optional<Vector> extension;
    whole.for_each_element([&](const Vector& x) {
      if (extension || a.member(x)) return;
      if (std::all_of(basis.begin(), basis.end(), [&](const Vector& b) { return c.commute(x, b); })) extension = x;
    });
    if (extension) {
      return fail("abelian subalgebra from the set is not maximal", {{"set", set}, {"element", codes(*extension)}});
    }
  }
  return pass(std::to_string(seeds) + " maximal independent sets give maximal abelian subalgebras");
}

bool subset_criterion(Context& c, const std::vector<std::size_t>& set, const Bitset& in_set) {
  std::vector<Vector> reps;
  for (auto v : set) reps.push_back(c.lifts[v]);
  const Subspace common = centralizer_of_set(c.L, reps);
  const Bitset covered = c.points_in(common);
  return covered.is_subset_of(in_set);
}

CheckResult dominating_criterion(Context& c) {
  const std::size_t n = c.G.order();
  if (n == 0) return not_applicable("no vertices");

  for (std::size_t v = 0; v < n; ++v) {
    const bool dominates = c.G.degree(v) + 1 == n;
    const bool criterion = c.cent(v) == c.line_plus_center(v);
    if (dominates != criterion) {
      return fail("singleton domination disagrees with C(x) = span{x} + Z",
                  {{"part", "singleton"}, {"vertex", v}, {"dominating", dominates}, {"criterion", criterion}});
    }
  }

  auto rng = c.rng(0xD0D0);
  const std::size_t max_size = std::min<std::size_t>(n, c.g.d() + 1);
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const std::size_t k = 1 + rng() % max_size;
    Bitset in_set(n);
    while (in_set.count() < k) in_set.set(rng() % n);
    const auto set = members(in_set);
    const bool dominates = is_dominating(c.G, set);
    const bool criterion = subset_criterion(c, set, in_set);
    if (dominates != criterion) {
      return fail("subset domination disagrees with the centralizer criterion",
                  {{"part", "subset"}, {"set", set}, {"dominating", dominates}, {"criterion", criterion}});
    }
  }

  std::vector<std::size_t> basis_set;
  for (std::size_t i = 0; i < c.L.dim(); ++i) {
    const Vector e = c.L.basis_vector(i);
    if (c.center().member(e)) continue;
    const auto v = *c.g.quotient.locate(e);
    if (std::find(basis_set.begin(), basis_set.end(), v) == basis_set.end()) basis_set.push_back(v);
  }
  std::sort(basis_set.begin(), basis_set.end());
  if (!is_dominating(c.G, basis_set)) return fail("non-central basis vectors do not dominate", {{"part", "basis"}, {"set", basis_set}});
  const Bounded gamma = c.inv().domination;
  std::size_t non_central = 0;
  for (std::size_t i = 0; i < c.L.dim(); ++i) non_central += c.center().member(c.L.basis_vector(i)) ? 0 : 1;
  if (gamma.exact && static_cast<std::size_t>(gamma.value) > non_central) {
    return fail("domination number exceeds the basis bound", {{"part", "basis"}, {"gamma", gamma.value}, {"bound", non_central}});
  }
  return pass(std::to_string(n) + " singletons, " + std::to_string(c.cfg.trials) + " random subsets, basis bound " +
              std::to_string(non_central) + (gamma.exact ? ", gamma " + std::to_string(gamma.value) : ""));
}

CheckResult codim2_domination(Context& c) {
  if (c.g.d() != 2) return not_applicable("center has codimension " + std::to_string(c.g.d()));
  std::size_t satisfying = 0;
  for (std::size_t v = 0; v < c.G.order(); ++v) satisfying += c.cent(v).dim() - c.g.s() > 1 ? 1 : 0;
  if (satisfying != c.G.order()) {
    return not_applicable("dim C(x)/Z > 1 holds at " + std::to_string(satisfying) + " of " + std::to_string(c.G.order()) +
                          " vertices");
  }
  const Bounded gamma = c.inv().domination;
  if (!gamma.exact) return not_computed("domination number beyond guard");
  if (gamma.value == 2) return pass("gamma = 2");
  return fail("hypothesis holds but gamma differs from 2", {{"gamma", gamma.value}});
}

CheckResult chromatic_abelian_cover(Context& c) {
  const Bounded chi = c.inv().chromatic;
  if (!chi.exact) return not_computed("chromatic number beyond guard");
  const auto cover = min_abelian_cover(c.L, c.cfg.guards);
  if (!cover || !cover->exact) return not_computed("abelian cover beyond guard");
  if (chi.value == cover->value) return pass("chi = cover = " + std::to_string(chi.value));
  return fail("chromatic number differs from the minimum abelian cover", {{"chromatic", chi.value}, {"cover", cover->value}});
}

// u, w both non-adjacent to v but adjacent to each other: the obstruction to
// being complete multipartite.
std::optional<json> multipartite_obstruction(const Graph& g) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    Bitset far = g.neighbors(v).complement();
    far.reset(v);
    for (std::size_t u = far.find_first(); u < far.size(); u = far.find_next(u + 1)) {
      const Bitset both = far & g.neighbors(u);
      if (both.any()) return json{{"u", u}, {"v", v}, {"w", both.find_first()}};
    }
  }
  return std::nullopt;
}

CheckResult ct_ac_multipartite(Context& c) {
  const auto ac = c.ac();
  if (!ac) return not_computed("q^n exceeds the element guard");
  const auto parts = multipartite_decomposition(c.G);
  const auto obstruction = multipartite_obstruction(c.G);
  if (parts.has_value() == obstruction.has_value()) {
    return fail("multipartite decomposition inconsistent with the graph", {{"multipartite", parts.has_value()}});
  }

  std::string detail;
  if (c.g.s() == 0) {
    const auto ct = is_ct(c.L, c.cfg.guards.elements);
    if (!ct) return not_computed("q^n exceeds the element guard");
    if (*ct != parts.has_value()) {
      json w{{"ct", *ct}, {"multipartite", parts.has_value()}};
      if (obstruction) w["triple"] = *obstruction;
      return fail(*ct ? "CT algebra with a graph that is not complete multipartite"
                      : "graph is complete multipartite but the algebra is not CT",
                  w);
    }
    detail = std::string(*ct ? "CT" : "not CT") + ", trivial center; ";
  }

  bool classes_match = parts.has_value();
  json bad_class = nullptr;
  if (parts) {
    for (const auto& part : *parts) {
      Bitset cls(c.G.order());
      for (auto v : part) cls.set(v);
      for (auto v : part) {
        if (!(c.points_in(c.cent(v)) == cls)) {
          classes_match = false;
          bad_class = {{"class", part}, {"member", v}};
          break;
        }
      }
      if (!classes_match) break;
    }
  }
  if (*ac != classes_match) {
    json w{{"ac", *ac}, {"multipartite", parts.has_value()}};
    if (obstruction) w["triple"] = *obstruction;
    if (!bad_class.is_null()) w["class"] = bad_class;
    return fail(*ac ? "AC algebra without partite sets of the form P(C(x)/Z)"
                    : "partite sets of the form P(C(x)/Z) but the algebra is not AC",
                w);
  }
  if (*ac) return pass(detail + "AC, " + std::to_string(parts->size()) + " partite sets P(C(x)/Z)");
  return pass(detail + "not AC, graph is not of that form");
}

CheckResult clique_equals_chromatic_ac(Context& c) {
  const auto ac = c.ac();
  if (!ac) return not_computed("q^n exceeds the element guard");
  if (!*ac) return not_applicable("algebra is not AC");
  const Bounded omega = c.inv().clique;
  const Bounded chi = c.inv().chromatic;
  if (!omega.exact || !chi.exact) return not_computed("clique or chromatic number beyond guard");
  if (omega.value == chi.value) return pass("omega = chi = " + std::to_string(chi.value));
  return fail("AC algebra with clique number below chromatic number", {{"clique", omega.value}, {"chromatic", chi.value}});
}

using CheckFn = CheckResult (*)(Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"adjacency_bracket", adjacency_bracket},
      {"vertex_count_degree_formula", vertex_count_degree_formula},
      {"regularity_centralizer_dims", regularity_centralizer_dims},
      {"complete_iff_line_centralizers", complete_iff_line_centralizers},
      {"diameter_girth", diameter_girth},
      {"hamiltonian", hamiltonian_check},
      {"eulerian", eulerian_check},
      {"kappa", kappa_check},
      {"planarity_classification", planarity_classification},
      {"regular_nilpotent_class", regular_nilpotent_class},
      {"max_independent_abelian", max_independent_abelian},
      {"dominating_criterion", dominating_criterion},
      {"codim2_domination", codim2_domination},
      {"chromatic_abelian_cover", chromatic_abelian_cover},
      {"ct_ac_multipartite", ct_ac_multipartite},
      {"clique_equals_chromatic_ac", clique_equals_chromatic_ac},
  };
  return checks;
}

CheckResult run_in(Context& c, std::string_view id) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = fn(c);
    r.check = name;
    if (c.cfg.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown check '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return ids;
}

CheckResult run_check(const NCGraph& g, std::string_view id, const VerifyConfig& config) {
  Context c(g, config);
  return run_in(c, id);
}

TheoremReport verify_all(const NCGraph& g, const VerifyConfig& config) {
  Context c(g, config);
  TheoremReport report{g.algebra().name(), fingerprint(g.algebra()), {}};
  for (const auto& id : check_ids()) report.checks.push_back(run_in(c, id));
  return report;
}

TheoremReport verify_all(const LieAlgebra& algebra, const VerifyConfig& config) {
  return verify_all(build_graph(algebra), config);
}

CheckResult check_iso_size(const LieAlgebra& a, const LieAlgebra& b, const VerifyConfig& config) {
  CheckResult r = [&] {
    if (!(a.field() == b.field())) return not_applicable("algebras over different fields");
    const NCGraph ga = build_graph(a);
    const NCGraph gb = build_graph(b);
    const auto iso = is_isomorphic(ga.graph, gb.graph, config.guards.isomorphism, config.guards.search_nodes);
    if (!iso) return not_computed("graph isomorphism beyond guard");
    if (!*iso) return not_applicable("graphs are not isomorphic");
    const bool same_order = a.cardinality() == b.cardinality();
    const bool same_center = ga.s() == gb.s();
    json w{{"d_a", ga.d()}, {"d_b", gb.d()}, {"dim_a", a.dim()}, {"dim_b", b.dim()}, {"center_a", ga.s()}, {"center_b", gb.s()}};
    if (ga.d() != gb.d()) return fail("isomorphic graphs with different quotient dimensions", w);
    if (same_order != same_center) return fail("|L| = |g| and |Z(L)| = |Z(g)| disagree", w);
    return pass(std::string(same_order ? "equal" : "different") + " orders and centers, quotient dimension " +
                std::to_string(ga.d()));
  }();
  r.check = "iso_size";
  return r;
}

bool revalidate(const NCGraph& g, const CheckResult& failure, const VerifyConfig& config) {
  if (failure.status != Status::Fail) return false;
  const json& w = failure.witness;
  const LieAlgebra& L = g.algebra();
  if (failure.check == "adjacency_bracket" && w.is_object() && w.contains("u")) {
    const auto u = w["u"].get<std::size_t>();
    const auto v = w["v"].get<std::size_t>();
    const Vector x = w.contains("x") ? from_codes(w["x"]) : g.quotient.lift(u);
    const Vector y = w.contains("y") ? from_codes(w["y"]) : g.quotient.lift(v);
    if (g.quotient.locate(x) != u || g.quotient.locate(y) != v) return false;
    return g.graph.adjacent(u, v) != !is_zero(L.bracket(x, y));
  }
  if (failure.check == "vertex_count_degree_formula" && w.is_object() && w.contains("vertex")) {
    const auto v = w["vertex"].get<std::size_t>();
    const std::size_t r = centralizer(L, g.quotient.lift(v)).dim();
    return g.graph.degree(v) != formula_degree(static_cast<std::uint64_t>(g.q()), g.n(), r, g.s());
  }
  if (failure.check == "iso_size") return false;
  // Other witnesses summarize a global property: the check must fail again
  // with the same witness.
  const CheckResult again = run_check(g, failure.check, config);
  return again.status == Status::Fail && again.witness == failure.witness;
}

CensusVerification verify_census(std::size_t dim, const FieldSpec& spec, const VerifyConfig& config, unsigned jobs) {
  CensusVerification out{run_census(dim, spec, config.guards, jobs), {}, {}};
  for (const auto& rec : out.census.records) out.reports.push_back(verify_all(rec.algebra, config));
  for (const auto& cls : out.census.classes) {
    const auto& rep = out.census.records[cls.members.front()].algebra;
    for (std::size_t i = 1; i < cls.members.size(); ++i) {
      CheckResult r = check_iso_size(rep, out.census.records[cls.members[i]].algebra, config);
      out.pair_checks.push_back(std::move(r));
    }
  }
  return out;
}

json to_json(const CheckResult& r, const TheoremReport* owner) {
  json j;
  if (owner) {
    j["algebra"] = owner->algebra;
    j["fingerprint"] = owner->fingerprint;
  }
  j["check"] = r.check;
  j["status"] = std::string(to_string(r.status));
  j["detail"] = r.detail;
  j["witness"] = r.witness;
  if (r.seconds > 0.0) j["seconds"] = r.seconds;
  return j;
}

std::string report_jsonl(const TheoremReport& report) {
  std::string out;
  for (const auto& c : report.checks) out += to_json(c, &report).dump() + "\n";
  return out;
}

std::string report_text(const TheoremReport& report) {
  std::ostringstream out;
  out << report.algebra << " [" << report.fingerprint << "]\n";
  for (const auto& c : report.checks) {
    out << "  " << to_string(c.status) << "  " << c.check;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.status == Status::Fail) out << "  witness " << c.witness.dump();
    if (c.seconds > 0.0) out << "  (" << c.seconds << " s)";
    out << "\n";
  }
  return out.str();
}

std::string census_report_jsonl(const CensusVerification& v) {
  std::string out;
  for (const auto& r : v.reports) out += report_jsonl(r);
  for (std::size_t c = 0, k = 0; c < v.census.classes.size(); ++c) {
    const auto& cls = v.census.classes[c];
    const auto& rep = v.census.records[cls.members.front()];
    for (std::size_t i = 1; i < cls.members.size(); ++i, ++k) {
      json j = to_json(v.pair_checks[k]);
      j["algebra"] = rep.algebra.name();
      j["other"] = v.census.records[cls.members[i]].algebra.name();
      out += j.dump() + "\n";
    }
  }
  json summary{{"kind", "summary"},
               {"algebras", v.reports.size()},
               {"graph_classes", v.census.classes.size()},
               {"pass", v.count(Status::Pass)},
               {"fail", v.count(Status::Fail)},
               {"not_applicable", v.count(Status::NotApplicable)},
               {"not_computed", v.count(Status::NotComputed)}};
  out += summary.dump() + "\n";
  return out;
}

bool AlgebraComparison::distinct_algebras_same_graph() const {
  return graphs_isomorphic.value_or(false) &&
         (class_a.has_value() != class_b.has_value() || solvable_a != solvable_b || center_a != center_b);
}

std::string AlgebraComparison::verdict() const {
  if (!graphs_isomorphic) return "not computed: graphs exceed the isomorphism guard";
  if (!*graphs_isomorphic) {
    return "graphs non-isomorphic (orders " + std::to_string(order_a) + " vs " + std::to_string(order_b) + ")";
  }
  if (class_a.has_value() != class_b.has_value()) {
    return std::string("graphs isomorphic; algebras differ (") + (class_a ? "nilpotent" : "non-nilpotent") + " vs " +
           (class_b ? "nilpotent" : "non-nilpotent") + ")";
  }
  if (solvable_a != solvable_b) return "graphs isomorphic; algebras differ (solvability)";
  if (center_a != center_b) return "graphs isomorphic; algebras differ (center dimension)";
  return "graphs isomorphic; no structural discriminator found";
}

json AlgebraComparison::to_json() const {
  auto cls = [](const std::optional<std::size_t>& c) { return c ? json(*c) : json(nullptr); };
  return {{"graphs_isomorphic", graphs_isomorphic ? json(*graphs_isomorphic) : json(nullptr)},
          {"order", {order_a, order_b}},
          {"nilpotency_class", {cls(class_a), cls(class_b)}},
          {"solvable", {solvable_a, solvable_b}},
          {"center_dim", {center_a, center_b}},
          {"distinct_algebras_same_graph", distinct_algebras_same_graph()},
          {"verdict", verdict()}};
}

AlgebraComparison compare_algebras(const LieAlgebra& a, const LieAlgebra& b, const Guards& guards) {
  const NCGraph ga = build_graph(a);
  const NCGraph gb = build_graph(b);
  const SeriesData sa = series(a);
  const SeriesData sb = series(b);
  AlgebraComparison out;
  out.graphs_isomorphic = is_isomorphic(ga.graph, gb.graph, guards.isomorphism, guards.search_nodes);
  out.order_a = ga.graph.order();
  out.order_b = gb.graph.order();
  out.class_a = sa.nilpotency_class;
  out.class_b = sb.nilpotency_class;
  out.solvable_a = sa.solvable;
  out.solvable_b = sb.solvable;
  out.center_a = ga.s();
  out.center_b = gb.s();
  return out;
}

}  // namespace ncg
