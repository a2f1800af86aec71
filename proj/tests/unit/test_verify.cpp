#include <random>

#include "doctest.h"
#include "ncg/catalog.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

TEST_CASE("catalog algebras pass every check") {
  for (int q : {2, 3, 4, 5})
    for (auto& name : builtin_names()) {
      if (name.rfind("paper_", 0) == 0 && q != 2) continue;
      CAPTURE(q);
      CAPTURE(name);
      auto r = verify_all(builtin(name, default_field_spec(q)));
      CHECK(r.checks.size() == check_ids().size());
      for (auto& c : r.checks) {
        CAPTURE(c.check);
        CAPTURE(c.detail);
        CHECK(c.status != Status::Fail);
      }
    }
}

TEST_CASE("flipped adjacency is caught and the witness revalidates") {
  std::mt19937_64 rng(1);
  for (auto& name : {"heisenberg", "sl2", "gl2", "affine2"}) {
    auto base = build_graph(builtin(name, default_field_spec(3)));
    for (int trial = 0; trial < 5; ++trial) {
      auto g = base;
      std::uniform_int_distribution<std::size_t> d(0, g.graph.order() - 1);
      std::size_t u = d(rng), v = d(rng);
      while (v == u) v = d(rng);
      g.graph.flip_edge(u, v);
      auto r = verify_all(g);
      CHECK(r.failed());
      std::size_t revalidated = 0;
      for (auto& c : r.checks)
        if (c.status == Status::Fail) {
          CHECK_FALSE(c.witness.is_null());
          revalidated += revalidate(g, c);
          CHECK_FALSE(revalidate(base, c));
        }
      CHECK(revalidated > 0);
    }
  }
}

TEST_CASE("graph-isomorphic algebras with different nilpotency") {
  auto cmp = compare_algebras(paper_L1(), paper_L2());
  CHECK(cmp.graphs_isomorphic == std::optional<bool>(true));
  CHECK(cmp.order_a == 3);
  CHECK(cmp.class_a == std::optional<std::size_t>(2));
  CHECK(cmp.class_b == std::nullopt);
  CHECK(cmp.distinct_algebras_same_graph());
  CHECK(cmp.verdict().find("algebras differ") != std::string::npos);
  CHECK(check_iso_size(paper_L1(), paper_L2()).status == Status::Pass);
  auto other = compare_algebras(heisenberg(default_field_spec(3)), sl2(default_field_spec(3)));
  CHECK(other.graphs_isomorphic == std::optional<bool>(false));
  CHECK_FALSE(other.distinct_algebras_same_graph());
}

TEST_CASE("census verification") {
  auto v = verify_census(3, default_field_spec(2));
  CHECK(v.reports.size() == 119);
  CHECK(v.count(Status::Fail) == 0);
  CHECK(v.count(Status::Pass) > 0);
  auto a = census_report_jsonl(v);
  CHECK(a == census_report_jsonl(verify_census(3, default_field_spec(2), {}, 2)));
  VerifyConfig other;
  other.seed = 5;
  CHECK(verify_census(2, default_field_spec(3), other).count(Status::Fail) == 0);
}

TEST_CASE("report rendering") {
  auto r = verify_all(sl2(default_field_spec(5)));
  auto lines = report_jsonl(r);
  std::size_t n = 0;
  for (char c : lines) n += c == '\n';
  CHECK(n == check_ids().size());
  CHECK(lines.find("\"seconds\"") == std::string::npos);
  CHECK_FALSE(report_text(r).empty());
  CHECK(to_string(Status::NotApplicable) == "not-applicable");
}
