#include "hsw/spherical.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace hsw;

namespace {

struct Fixture {
  std::shared_ptr<const AffineWeylGroup> g;
  std::shared_ptr<const HeckeAlgebra> h;
  SphericalModule m;
  explicit Fixture(const char* name)
      : g(std::make_shared<AffineWeylGroup>(RootDatum::preset(name))),
        h(std::make_shared<HeckeAlgebra>(g)),
        m(h) {}
  SphElt mm(std::initializer_list<int> lambda, LaurentPoly c = 1) const { return SphElt::basis(Weight(lambda), c); }
};

LaurentPoly v(int e) { return LaurentPoly::v(e); }

}  // namespace

TEST_CASE("A1 Bott-Samelson characters") {
  Fixture f("A1");
  const AffineElt e = f.g->identity();
  const int s = 0, s0 = 1;
  CHECK(f.m.bs_char(e, {s0}) == f.mm({-2}) + f.mm({0}, v(-1)));
  CHECK(f.m.bs_char(e, {s0, s}) == f.mm({2}) + f.mm({-2}, v(-1)) + f.mm({0}, 1 + v(-2)));
  CHECK(f.m.bs_char(e, {s}) == f.mm({0}, v(1) + v(-1)));
  CHECK(f.m.bs_char(e, {}) == f.mm({0}));
  const AffineElt omega = f.m.omega_from_weight(Weight{-1});
  CHECK(f.m.bs_char(omega, {}) == f.mm({-1}));
  CHECK_THROWS_AS(f.m.bs_char(f.g->simple(0).elt, {}), InputError);
  CHECK_THROWS_AS(f.m.omega_from_weight(Weight{2}), InputError);
}

TEST_CASE("A1 canonical basis and decomposition") {
  Fixture f("A1");
  CHECK(f.m.canonical_basis(Weight{2}).expansion == f.mm({2}) + f.mm({-2}, v(-1)) + f.mm({0}, v(-2)));
  CHECK(f.m.canonical_basis(Weight{0}).expansion == f.mm({0}));
  CHECK(f.m.canonical_basis(Weight{-1}).expansion == f.mm({-1}));
  CHECK(f.m.to_string(f.m.canonical_basis(Weight{2}).expansion) == "m(2) + v^-1*m(-2) + v^-2*m(0)");

  const auto dec = f.m.decompose_bs(f.g->identity(), {1, 0});
  CHECK(dec == std::map<Weight, LaurentPoly>{{Weight{0}, 1}, {Weight{2}, 1}});
  const auto dec_s = f.m.decompose_bs(f.g->identity(), {0});
  CHECK(dec_s == std::map<Weight, LaurentPoly>{{Weight{0}, v(1) + v(-1)}});
}

TEST_CASE("A1 pairings") {
  Fixture f("A1");
  const AffineElt e = f.g->identity();
  CHECK(f.m.hom_rank(e, {0}, e, {0}) == v(-2) + 2 + v(2));
  CHECK(f.m.hom_rank(e, {1}, e, {1}) == 1 + v(2));
  CHECK(f.m.hom_rank(e, {}, e, {1}) == v(1));
  const AffineElt omega = f.m.omega_from_weight(Weight{-1});
  CHECK(f.m.hom_rank(omega, {}, omega, {}) == 1);
  CHECK(f.m.hom_rank(omega, {}, e, {}).is_zero());
  CHECK(f.m.pairing(f.mm({0}, v(1)), f.mm({0}, v(2))) == v(-3));
}

TEST_CASE("A2 decomposition of a Bott-Samelson character") {
  Fixture f("A2");
  const int s1 = 0, s2 = 1, s0 = 2;
  const auto dec = f.m.decompose_bs(f.g->identity(), {s0, s1, s2});
  CHECK(dec == std::map<Weight, LaurentPoly>{{Weight{-1, 2}, 1}, {Weight{0, 0}, v(-1) + v(1)}});
  const SphElt b = f.m.canonical_basis(Weight{-1, 2}).expansion;
  CHECK(b.coeff(Weight{0, 0}) == v(-3) + v(-1));
  CHECK(b.coeff(Weight{-1, -1}) == v(-2));
}

TEST_CASE("spherical bar involution is compatible with the action") {
  Fixture f("A2");
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> k(0, 2), len(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    AffineElt x = f.g->identity(), y = f.g->identity();
    for (int i = len(rng); i > 0; --i) x = f.g->times_simple(x, k(rng));
    for (int i = len(rng); i > 0; --i) y = f.g->times_simple(y, k(rng));
    const SphElt mx = f.m.project_basis(x);
    const HeckeElt ty = f.h->T(y);
    CHECK(f.m.bar(f.m.bar(mx)) == mx);
    CHECK(f.m.bar(f.m.act(mx, ty)) == f.m.act(f.m.bar(mx), f.h->bar(ty)));
    CHECK(f.m.act(mx, ty) == f.m.project(f.h->mul(f.h->T(x), ty)));
  }
  CHECK(f.m.bar(f.mm({0, 0})) == f.mm({0, 0}));
}

TEST_CASE("canonical basis structure in A1 and B2") {
  for (const char* name : {"A1", "B2"}) {
    CAPTURE(name);
    Fixture f(name);
    for (const auto& lambda : weight_box(f.g->rank(), 3)) {
      const SphElt b = f.m.canonical_basis(lambda).expansion;
      CHECK(f.m.bar(b) == b);
      CHECK(b.coeff(lambda) == 1);
      for (const auto& [mu, c] : b.terms()) {
        if (mu == lambda) continue;
        CHECK(c.in_negative_part());
        CHECK(c.nonnegative());
        CHECK(f.m.weight_length(mu) < f.m.weight_length(lambda));
      }
    }
  }
}

TEST_CASE("pushforward of flag Bott-Samelson characters") {
  Fixture f("A2");
  const AffineElt omega = f.m.omega_from_weight(Weight{0, -1});
  for (const std::vector<int>& word : {std::vector<int>{}, {0}, {2, 1}, {0, 2, 1}, {1, 1, 0}}) {
    const HeckeElt fl = f.h->mul(f.h->T(omega), f.m.fl_bs_char(word));
    CHECK(f.m.project(fl) == f.m.bs_char(omega, word));
  }
}
