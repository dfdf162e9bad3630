#include <random>

#include "doctest.h"
#include "qgrass/error.hpp"
#include "qgrass/serialize.hpp"

using namespace qgrass;

TEST_CASE("quiver round trip keeps input order") {
  Quiver q({"b", "a", "c"}, {{"z", "b", "a"}, {"y", "a", "c"}});
  Json j = to_json(q);
  CHECK(quiver_from_json(j) == q);
  CHECK(quiver_from_json(Json::parse(j.dump())) == q);
}

TEST_CASE("representation round trip over F_p and Q") {
  std::mt19937_64 rng(31);
  auto q = std::make_shared<const Quiver>(
      Quiver({"1", "2", "w"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"c", "w", "2"}}));
  for (Field f : {Field::prime(2), Field::prime(7), Field::rational()}) {
    for (int t = 0; t < 10; ++t) {
      Representation m = random_representation(q, f, {rng() % 3, rng() % 3, rng() % 3}, rng);
      Representation back = representation_from_json(Json::parse(to_json(m).dump()));
      CHECK(back == m);
      CHECK(to_json(back).dump() == to_json(m).dump());
    }
  }
}

TEST_CASE("rational entries") {
  Json j = Json::parse(R"({
    "quiver": {"vertices": ["1","2"], "arrows": [{"id":"a","from":"1","to":"2"}]},
    "field": {"type": "rational"},
    "dims": {"1": 1, "2": 2},
    "matrices": {"a": [["1/2"], [3]]}
  })");
  Representation m = representation_from_json(j);
  CHECK(m.matrix("a").at(0, 0).to_string() == "1/2");
  CHECK(to_json(m)["matrices"]["a"][1][0] == "3");
  Representation mod5 = representation_from_json(j, Field::prime(5));
  CHECK(mod5.matrix("a").at(0, 0) == Scalar::from_int(Field::prime(5), 3));
}

TEST_CASE("malformed documents are rejected with a reason") {
  Json base = Json::parse(R"({
    "quiver": {"vertices": ["1","2"], "arrows": [{"id":"a","from":"1","to":"2"}]},
    "field": {"type": "prime", "p": 3},
    "dims": {"1": 1, "2": 1},
    "matrices": {"a": [[1]]}
  })");
  CHECK_NOTHROW(representation_from_json(base));
  Json wrong_shape = base;
  wrong_shape["matrices"]["a"] = Json::parse("[[1, 2]]");
  CHECK_THROWS_AS(representation_from_json(wrong_shape), DimensionMismatch);
  Json unknown_arrow = base;
  unknown_arrow["matrices"]["b"] = Json::parse("[[1]]");
  CHECK_THROWS_AS(representation_from_json(unknown_arrow), InvalidArgument);
  Json bad_field = base;
  bad_field["field"]["p"] = 4;
  CHECK_THROWS_AS(representation_from_json(bad_field), InvalidArgument);
  Json no_field = base;
  no_field.erase("field");
  CHECK_THROWS_AS(representation_from_json(no_field), InvalidArgument);
  Json bad_dims = base;
  bad_dims["dims"]["x"] = 1;
  CHECK_THROWS_AS(representation_from_json(bad_dims), InvalidArgument);
}

TEST_CASE("grassmannian report layout") {
  Field f = Field::prime(3);
  auto q = std::make_shared<const Quiver>(make_kronecker(2));
  Representation m(q, f, {2, 2}, {Matrix::identity(f, 2), Matrix::identity(f, 2)});
  GrassmannianReport r = enumerate_submodules(m, {1, 1});
  Json j = to_json(r);
  CHECK(j["count"] == 4);
  CHECK(j["points"].size() == 4);
  CHECK(j["dimvec"]["1"] == 1);
  CHECK_FALSE(to_json(r, true).contains("points"));
}
