#include <algorithm>
#include <tuple>

#include "doctest.h"
#include "ncg/census.hpp"

using namespace ncg;

// Class shapes frozen from a separate brute-force construction of every
// graph followed by isomorphism classification.
TEST_CASE("dim 3 over F2 census classes") {
  auto c = run_census(3, default_field_spec(2));
  CHECK(c.stats == EnumerationStats{512, 120, 119});
  CHECK(c.records.size() == 119);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> shapes;
  for (auto& cls : c.classes) shapes.emplace_back(cls.order, cls.size, cls.members.size());
  std::sort(shapes.begin(), shapes.end());
  CHECK(shapes == std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>{{3, 3, 49}, {7, 18, 42}, {7, 21, 28}});
  std::size_t mixed = 0;
  for (auto& cls : c.classes) {
    mixed += cls.mixed_nilpotency();
    for (auto m : cls.members) CHECK(c.records[m].graph_class == cls.id);
    if (cls.order == 3) {
      CHECK(cls.nilpotent == 7);
      CHECK(cls.mixed_nilpotency());
    }
  }
  CHECK(mixed == 1);
}

TEST_CASE("dim 2 over F3 census") {
  auto c = run_census(2, default_field_spec(3));
  CHECK(c.stats == EnumerationStats{9, 9, 8});
  REQUIRE(c.classes.size() == 1);
  CHECK(c.classes[0].order == 4);
  CHECK(c.classes[0].size == 6);
  CHECK(c.classes[0].members.size() == 8);
}

TEST_CASE("census output does not depend on thread count") {
  auto a = census_jsonl(run_census(3, default_field_spec(2), {}, 1));
  auto b = census_jsonl(run_census(3, default_field_spec(2), {}, 3));
  CHECK(a == b);
  CHECK(census_summary(run_census(2, default_field_spec(2))).find('3') != std::string::npos);
}
