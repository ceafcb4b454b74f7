#include "hsw/root_datum.hpp"

#include <doctest.h>

using namespace hsw;

TEST_CASE("preset root systems and Weyl groups") {
  struct Case {
    const char* name;
    std::size_t positive;
    int order;
  };
  for (const Case c : {Case{"A1", 1, 2}, Case{"A2", 3, 6}, Case{"A3", 6, 24}, Case{"B2", 4, 8}, Case{"C3", 9, 48},
                       Case{"B3", 9, 48}, Case{"D4", 12, 192}, Case{"G2", 6, 12}, Case{"F4", 24, 1152},
                       Case{"GL3", 3, 6}, Case{"A1xGL2", 2, 4}}) {
    CAPTURE(c.name);
    const RootDatum d = RootDatum::preset(c.name);
    CHECK(d.positive_roots().size() == c.positive);
    const WeylGroup W(d);
    CHECK(W.size() == c.order);
    CHECK(W.length(W.longest()) == static_cast<int>(c.positive));
  }
}

TEST_CASE("fundamental weights and rho") {
  for (const char* name : {"A2", "B2", "G2", "C3", "GL3"}) {
    CAPTURE(name);
    const RootDatum d = RootDatum::preset(name);
    for (int i = 0; i < d.semisimple_rank(); ++i)
      for (int j = 0; j < d.semisimple_rank(); ++j)
        CHECK(d.fundamental_weights()[i].dot(d.simple_coroot(j)) == (i == j ? 1 : 0));
    for (int i = 0; i < d.semisimple_rank(); ++i) CHECK(d.two_rho().dot(d.simple_coroot(i)) == 2);
  }
}

TEST_CASE("cartan conventions") {
  const RootDatum g2 = RootDatum::preset("G2");
  CHECK(g2.cartan(0, 1) * g2.cartan(1, 0) == 3);
  const RootDatum b2 = RootDatum::preset("B2");
  const RootDatum c2 = RootDatum::preset("C2");
  CHECK(b2.cartan(0, 1) == c2.cartan(1, 0));
  CHECK(b2.cartan(1, 0) == c2.cartan(0, 1));
}

TEST_CASE("root coordinates") {
  const RootDatum d = RootDatum::preset("A2");
  const auto theta = d.simple_root(0) + d.simple_root(1);
  const auto c = d.root_coordinates(theta);
  REQUIRE(c);
  CHECK(*c == std::vector<long>{1, 1});
  CHECK_FALSE(d.root_coordinates(d.fundamental_weights()[0]));
  CHECK(d.root_index(theta) > 0);
  CHECK(d.root_index(-theta) < 0);
}

TEST_CASE("invalid data are rejected") {
  CHECK_THROWS_AS(RootDatum::preset("Q3"), InputError);
  CHECK_THROWS_AS(RootDatum::preset("A"), InputError);
  // <alpha, alpha^vee> must be 2.
  CHECK_THROWS_AS(RootDatum("bad", 1, {Weight{1}}, {Weight{1}}), InputError);
  // Affine type A1^(1) is not of finite type.
  CHECK_THROWS_AS(RootDatum("bad", 2, {Weight{2, -2}, Weight{-2, 2}}, {Weight{1, 0}, Weight{0, 1}}), InputError);
}
