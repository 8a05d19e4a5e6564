#include "doctest.h"
#include "blowuplab/io.hpp"

using namespace blowuplab;

TEST_CASE("loading a simple arrangement") {
  auto inst = parse_instance(R"({"k":2,"forms":[["1","0"],["0","1"],["1","1"]],"labels":["l1","l2","l3"]})", "tri.json");
  CHECK(inst.id == "tri");
  REQUIRE(inst.simple.has_value());
  CHECK(inst.simple->k() == 2);
  CHECK(inst.simple->n() == 3);
  CHECK(inst.simple->labels()[2] == "l3");
  CHECK_FALSE(inst.is_stretched());

  auto with_id = parse_instance(R"({"id":"mine","k":2,"forms":[[1,0],[0,1],["1/2",3]]})", "x.json");
  CHECK(with_id.id == "mine");
  CHECK(with_id.simple->form(2)[0] == Rational(1, 2));
}

TEST_CASE("loading a stretched arrangement") {
  auto inst = parse_instance(
      R"({"k":2,"forms":[[1,0],[0,1]],"multiplicities":[2,1],"coefficients":[["1","-3"],["1"]]})", "s.json");
  REQUIRE(inst.is_stretched());
  CHECK(inst.k() == 2);
  CHECK(inst.stretched->total() == 3);
  CHECK(inst.stretched->coefficients[0][1] == -3);
}

TEST_CASE("invalid arrangements name the violated invariant") {
  CHECK_THROWS_WITH(parse_instance(R"({"k":2,"forms":[[1,0],[0,0],[0,1]]})", "z.json"),
                    doctest::Contains("zero form at index 2"));
  CHECK_THROWS_WITH(parse_instance(R"({"k":2,"forms":[[1,0],[2,0],[0,1]]})", "p.json"), doctest::Contains("stretch"));
  CHECK_THROWS_WITH(parse_instance(R"({"k":3,"forms":[[1,0,0],[0,1,0],[1,1,0]]})", "r.json"), doctest::Contains("rank"));
  CHECK_THROWS_AS(parse_instance(R"({"forms":[[1,0]]})", "m.json"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"k":2,"forms":[[1,"x"],[0,1]]})", "m.json"), InputError);
}

TEST_CASE("malformed JSON reports line and column") {
  CHECK_THROWS_WITH(parse_instance("{\n  \"k\": 2,\n  \"forms\": [[1,0],,]\n}", "bad.json"),
                    doctest::Contains("bad.json:3:"));
  CHECK_THROWS_AS(load_instance("/nonexistent/file.json"), InputError);
}

TEST_CASE("JSON rendering") {
  auto inst = parse_instance(R"({"k":2,"forms":[["1","0"],["0","1"],["-1/2","1"]]})", "a.json");
  auto j = to_json(*inst.simple);
  CHECK(j["k"] == 2);
  CHECK(j["forms"][2][0] == "-1/2");
  HilbertSeries hs{{1, 1}, 2};
  auto hj = to_json(hs);
  CHECK(hj["numerator"] == nlohmann::json::array({"1", "1"}));
  CHECK(hj["denominator_exponent"] == 2);
}
