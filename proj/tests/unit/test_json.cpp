#include "hsw/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hsw;

TEST_CASE("Laurent polynomial JSON round trip") {
  const LaurentPoly p = LaurentPoly::v(-2) * 3 - LaurentPoly::v(5) + 7;
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"-2":3,"0":7,"5":-1})");
  CHECK(laurent_from_json(j) == p);

  Int big = 1;
  for (int i = 0; i < 100; ++i) big *= 3;
  const LaurentPoly q = LaurentPoly::monomial(big, 1);
  CHECK(to_json(q)["1"].is_string());
  CHECK(laurent_from_json(to_json(q)) == q);
  CHECK(to_json(LaurentPoly()).dump() == "{}");
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"x":1})")), InputError);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("[1]")), InputError);
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("1,-2", 2) == Weight{1, -2});
  CHECK(parse_weight("(1, -2)", 2) == Weight{1, -2});
  CHECK(parse_weight("[+3]", 1) == Weight{3});
  CHECK_THROWS_AS(parse_weight("1,2", 1), InputError);
  CHECK_THROWS_AS(parse_weight("1,,2", 2), InputError);
  CHECK_THROWS_AS(parse_weight("a", 1), InputError);
  CHECK_THROWS_AS(parse_weight("", 1), InputError);
}

TEST_CASE("root datum JSON") {
  const RootDatum b2 = RootDatum::preset("B2");
  const RootDatum back = datum_from_json(datum_to_json(b2));
  CHECK(back.rank() == 2);
  CHECK(back.simple_roots() == b2.simple_roots());
  CHECK(back.simple_coroots() == b2.simple_coroots());

  const Json list = Json::array({datum_to_json(RootDatum::preset("A1")), datum_to_json(RootDatum::preset("A2"))});
  const RootDatum prod = datum_from_json(list);
  CHECK(prod.rank() == 3);
  CHECK(prod.positive_roots().size() == 4);

  const auto path = std::filesystem::temp_directory_path() / "hsw_test_datum.json";
  {
    std::ofstream out(path);
    out << list.dump();
  }
  CHECK(load_datum(path.string()).rank() == 3);
  std::filesystem::remove(path);
  CHECK(load_datum("G2").positive_roots().size() == 6);
  CHECK_THROWS_AS(load_datum("nonsense"), InputError);

  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"rank":1})")), InputError);
  CHECK_THROWS_AS(datum_from_json(Json::parse(R"({"rank":1,"simple_roots":[[2,0]],"simple_coroots":[[1]]})")),
                  InputError);
  CHECK_THROWS_AS(datum_from_json(Json::array()), InputError);
}

TEST_CASE("element and word JSON") {
  const AffineWeylGroup g(RootDatum::preset("A1"));
  const AffineElt x = g.min_rep(Weight{-1});
  const Json j = to_json(g, x);
  CHECK(j["lambda"] == Json::array({-1}));
  CHECK(j["w"] == Json::array({Json::array({-1})}));
  const Json w = word_to_json(g, {0, 1});
  CHECK(w.dump() == R"([{"kind":"finite","index":1},{"kind":"affine","index":1}])");
}
