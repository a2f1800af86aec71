#include "doctest.h"
#include "ncg/catalog.hpp"
#include "ncg/error.hpp"

using namespace ncg;
using nlohmann::json;

TEST_CASE("builtins") {
  CHECK(builtin("sl2", default_field_spec(5)).dim() == 3);
  CHECK(builtin("gl2", default_field_spec(3)).dim() == 4);
  CHECK_THROWS_AS(builtin("e8", default_field_spec(2)), InputError);
  CHECK_THROWS_AS(builtin("paper_L1", default_field_spec(3)), InputError);
  CHECK(paper_L1() == heisenberg(default_field_spec(2)));
}

TEST_CASE("json round trip") {
  for (int q : {2, 3, 4, 9})
    for (auto& name : builtin_names()) {
      if (name.rfind("paper_", 0) == 0 && q != 2) continue;
      auto L = builtin(name, default_field_spec(q));
      auto back = algebra_from_json(algebra_to_json(L));
      CHECK(back == L);
      CHECK(fingerprint(back) == fingerprint(L));
      CHECK(algebra_from_text(algebra_to_json(L).dump()) == L);
    }
  CHECK(fingerprint(heisenberg(default_field_spec(2))) != fingerprint(affine2(default_field_spec(2))));
  CHECK(fingerprint(heisenberg(default_field_spec(2))).size() == 16);
}

TEST_CASE("file format errors name the problem") {
  auto doc = json::parse(R"({"field":{"p":2},"dim":3,"brackets":[{"i":0,"j":1,"value":[0,0,1]}]})");
  CHECK(algebra_from_json(doc) == heisenberg(default_field_spec(2)));

  auto diag = doc;
  diag["brackets"].push_back({{"i", 1}, {"j", 1}, {"value", {0, 1, 0}}});
  CHECK_THROWS_AS(algebra_from_json(diag), InputError);

  auto wrong_len = doc;
  wrong_len["brackets"][0]["value"] = {1, 0};
  CHECK_THROWS_AS(algebra_from_json(wrong_len), InputError);

  auto bad_coeff = doc;
  bad_coeff["brackets"][0]["value"][1] = "one";
  try {
    algebra_from_json(bad_coeff);
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("brackets[0].value[1]") != std::string::npos);
  }

  auto jacobi = json::parse(R"({"field":{"p":3},"dim":3,"brackets":[
      {"i":0,"j":1,"value":[0,0,1]},{"i":0,"j":2,"value":[1,0,0]}]})");
  try {
    algebra_from_json(jacobi);
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not a Lie algebra") != std::string::npos);
  }

  try {
    algebra_from_text("{\n\"field\": {\"p\": 2},\n\"dim\": 3,,\n}");
    FAIL("accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"field":{"p":2},"dim":0,"brackets":[]})")), InputError);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"field":{"p":6},"dim":2,"brackets":[]})")), InputError);
}

TEST_CASE("prime field entries are reduced") {
  auto doc = json::parse(R"({"field":{"p":3},"dim":3,"brackets":[{"i":0,"j":1,"value":[0,0,-2]}]})");
  CHECK(algebra_from_json(doc).structure(0, 1)[2] == Scalar{1});
}

TEST_CASE("extension field entries") {
  auto doc = json::parse(R"({"field":{"p":2,"m":2,"modulus":[1,1,1]},"dim":2,
      "brackets":[{"i":0,"j":1,"value":[[0,1],[0,0]]}]})");
  auto L = algebra_from_json(doc);
  CHECK(L.field().q() == 4);
  CHECK(L.structure(0, 1)[0] == Scalar{2});
  CHECK(algebra_from_json(algebra_to_json(L)) == L);
}

// Counts frozen from a separate brute-force enumeration that checks the
// Jacobi identity on every element triple.
TEST_CASE("enumeration counts") {
  auto run = [](std::size_t dim, int q) {
    return enumerate_brackets(dim, default_field_spec(q), false, [](std::uint64_t, const LieAlgebra&) {});
  };
  CHECK(run(2, 2) == EnumerationStats{4, 4, 3});
  CHECK(run(2, 3) == EnumerationStats{9, 9, 8});
  CHECK(run(3, 2) == EnumerationStats{512, 120, 119});
  CHECK_THROWS_AS(candidate_count(5, default_field_spec(2)), GuardExceeded);
  CHECK(candidate_count(4, default_field_spec(2)) == (1u << 24));
}

TEST_CASE("enumeration visits valid algebras in code order") {
  std::uint64_t last = 0;
  std::size_t seen = 0;
  bool l1 = false, l2 = false;
  enumerate_brackets(3, default_field_spec(2), true, [&](std::uint64_t code, const LieAlgebra& L) {
    CHECK((seen == 0 || code > last));
    CHECK(L.valid());
    CHECK_FALSE(L.is_abelian());
    l1 = l1 || L == paper_L1();
    l2 = l2 || L == paper_L2();
    last = code;
    ++seen;
  });
  CHECK(seen == 119);
  CHECK(l1);
  CHECK(l2);
  std::size_t sliced = 0;
  for (std::uint64_t b = 0; b < 512; b += 100)
    enumerate_brackets(3, default_field_spec(2), true, [&](std::uint64_t, const LieAlgebra&) { ++sliced; }, b, b + 100);
  CHECK(sliced == 119);
}
