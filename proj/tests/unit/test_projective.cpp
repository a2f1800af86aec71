#include <set>

#include "doctest.h"
#include "ncg/catalog.hpp"
#include "ncg/error.hpp"
#include "ncg/projective.hpp"

using namespace ncg;

namespace {

std::vector<std::vector<int>> codes(const std::vector<Vector>& vs) {
  std::vector<std::vector<int>> out;
  for (auto& v : vs) {
    out.emplace_back();
    for (auto s : v) out.back().push_back(s.code);
  }
  return out;
}

}  // namespace

TEST_CASE("projective line order") {
  auto f = Field::of_order(3);
  CHECK(codes(projective_representatives(f, 2)) == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("projective point counts") {
  for (int q : {2, 3, 4, 5, 7, 8, 9})
    for (std::size_t d = 1; d <= 4; ++d) {
      auto f = Field::of_order(q);
      auto reps = projective_representatives(f, d);
      CHECK(reps.size() == projective_point_count(q, d));
      std::set<std::vector<int>> seen;
      for (auto& v : codes(reps)) {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        CHECK(v[lead] == 1);
        seen.insert(v);
      }
      CHECK(seen.size() == reps.size());
    }
}

TEST_CASE("central quotient of the Heisenberg algebra") {
  CentralQuotient cq(heisenberg(default_field_spec(2)));
  CHECK(cq.complement_cols() == std::vector<std::size_t>{0, 1});
  CHECK(cq.d() == 2);
  CHECK(cq.s() == 1);
  CHECK(cq.points().size() == 3);
  auto h = heisenberg(default_field_spec(2));
  CentralQuotient sum(direct_sum(h, heisenberg(default_field_spec(2))));
  CHECK(sum.s() == 2);
  CHECK(sum.d() == 4);
  CHECK(CentralQuotient(sl2(default_field_spec(5))).d() == 3);
}

TEST_CASE("normalize is invariant under scaling and central translation") {
  for (int q : {2, 3, 4, 5}) {
    auto L = heisenberg(default_field_spec(q));
    CentralQuotient cq(L);
    const auto& f = L.field();
    for (std::size_t i = 0; i < cq.points().size(); ++i) {
      auto x = cq.lift(i);
      CHECK(cq.locate(x) == std::optional<std::size_t>(i));
      for (auto lambda : f.elements()) {
        if (lambda == Field::zero()) continue;
        cq.center().for_each_element([&](const Vector& z) {
          auto y = add(f, scale(f, lambda, x), z);
          CHECK(cq.locate(y) == std::optional<std::size_t>(i));
        });
      }
    }
    CHECK(cq.locate(L.basis_vector(2)) == std::nullopt);
  }
}

TEST_CASE("abelian algebras have no graph") {
  auto f = std::make_shared<const Field>(Field::of_order(2));
  LieAlgebra ab(f, 2, std::vector<Scalar>(8));
  CHECK_THROWS_AS(CentralQuotient{ab}, InputError);
}
