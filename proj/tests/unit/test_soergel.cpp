#include "hsw/soergel_oracle.hpp"

#include <doctest.h>

#include <memory>

using namespace hsw;

namespace {

struct Fixture {
  std::shared_ptr<const AffineWeylGroup> g = std::make_shared<AffineWeylGroup>(RootDatum::preset("A1"));
  std::shared_ptr<const HeckeAlgebra> h = std::make_shared<HeckeAlgebra>(g);
  SphericalModule m{h};
  SoergelOracle oracle{g};
  const int s = 0;
  const int s0 = 1;
};

PolyMatrix matrix(std::initializer_list<std::initializer_list<BiPoly>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  PolyMatrix out(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& x : row) out(i, j++) = x;
    ++i;
  }
  return out;
}

}  // namespace

TEST_CASE("BiPoly arithmetic") {
  const BiPoly u = BiPoly::u(), h = BiPoly::hbar();
  const BiPoly p = (u + h) * (u - h);
  CHECK(p == u * u - h * h);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(0, 2) == -1);
  CHECK(p.has_hbar());
  CHECK(p.at_hbar_zero() == u * u);
  CHECK((u * h + h * h).divide_by_hbar() == u + h);
  CHECK_THROWS_AS(u.divide_by_hbar(), std::logic_error);
  CHECK(p.homogeneous_of(4));
  CHECK_FALSE((u + 1).homogeneous_of(2));
  CHECK((BiPoly::term(Rational(1, 2), 1) * 2) == u);
  CHECK((u - u).is_zero());
}

TEST_CASE("evaluate_at substitutes a matrix for u") {
  const BiPoly u = BiPoly::u();
  const PolyMatrix L = matrix({{0, 1}, {1, 0}});
  CHECK(evaluate_at(u * u, L) == PolyMatrix::identity(2));
  CHECK(evaluate_at(u * u * u + 2, L) == L + PolyMatrix::identity(2).scaled(2));
}

TEST_CASE("atoms") {
  Fixture f;
  const BiPoly u = BiPoly::u();
  const auto d0 = f.oracle.atom_D(f.s0);
  CHECK(d0.degrees == std::vector<int>{-1, 1});
  CHECK(d0.graded_rank() == LaurentPoly::v(-1) + LaurentPoly::v(1));
  CHECK(d0.theta == matrix({{-2 * u, 2 * u * u}, {2, -2 * u}}));
  const auto d = f.oracle.atom_D(f.s);
  CHECK(d.degrees == std::vector<int>{-1, 1});

  const auto e = f.oracle.atom_E(f.g->identity());
  CHECK(e.size() == 1);
  CHECK(e.theta == matrix({{0}}));
  // theta of E_{t_lambda} is 2 <lambda, alpha^vee> u.
  CHECK(f.oracle.atom_E(f.g->translation(Weight{2})).theta == matrix({{4 * u}}));
  CHECK(f.oracle.atom_E(f.g->translation(Weight{-1})).theta == matrix({{-2 * u}}));

  const AffineElt omega = f.g->min_rep(Weight{-1});
  REQUIRE(f.g->length(omega) == 0);
  CHECK(f.oracle.atom_E(omega).theta == matrix({{-2 * u}}));
}

TEST_CASE("tensor products") {
  Fixture f;
  const auto e = f.oracle.atom_E(f.g->identity());
  const auto d = f.oracle.atom_D(f.s);
  const auto d0 = f.oracle.atom_D(f.s0);
  const auto ed = SoergelOracle::tensor(e, d);
  CHECK(ed.degrees == d.degrees);
  CHECK(ed.left == d.left);
  CHECK(ed.theta == d.theta);

  const auto left = SoergelOracle::tensor(SoergelOracle::tensor(d, d0), d);
  const auto right = SoergelOracle::tensor(d, SoergelOracle::tensor(d0, d));
  CHECK(left.degrees == right.degrees);
  CHECK(left.left == right.left);
  CHECK(left.theta == right.theta);
  CHECK(left.graded_rank() == d.graded_rank() * d0.graded_rank() * d.graded_rank());

  const auto bs = f.oracle.bott_samelson(f.g->identity(), {f.s, f.s0});
  CHECK(bs.graded_rank() == d.graded_rank() * d0.graded_rank());
}

TEST_CASE("Hom graded ranks") {
  Fixture f;
  const auto e = f.oracle.atom_E(f.g->identity());
  const auto d = f.oracle.atom_D(f.s);
  const auto d0 = f.oracle.atom_D(f.s0);
  const auto omega = f.oracle.atom_E(f.g->min_rep(Weight{-1}));
  const LaurentPoly one_plus_v2 = 1 + LaurentPoly::v(2);

  CHECK(SoergelOracle::hom_graded_rank(e, e, 16).graded_rank == 1);
  CHECK(SoergelOracle::hom_graded_rank(d0, d0, 16).graded_rank == one_plus_v2);
  CHECK(SoergelOracle::hom_graded_rank(d, d0, 16).graded_rank == one_plus_v2);
  CHECK(SoergelOracle::hom_graded_rank(omega, e, 16).graded_rank.is_zero());
  CHECK(SoergelOracle::hom_graded_rank(e, d, 16).graded_rank == LaurentPoly::v(-1) + LaurentPoly::v(1));
  CHECK(SoergelOracle::hom_dimension(e, e, 0) == 1);
  CHECK(SoergelOracle::hom_dimension(e, e, 2) == 1);
  CHECK(SoergelOracle::hom_dimension(e, e, -2) == 0);

  const auto r = SoergelOracle::hom_graded_rank(d, d0, 16);
  CHECK(r.cutoff == 16);
  CHECK(r.dimensions.at(0) == 1);
}

TEST_CASE("Hom rank is symmetric and matches the pairing") {
  Fixture f;
  const auto words = std::vector<DecoratedWord>{
      {f.g->identity(), {}}, {f.g->identity(), {f.s}}, {f.g->identity(), {f.s0, f.s}}, {f.g->min_rep(Weight{-1}), {f.s}}};
  for (const auto& a : words)
    for (const auto& b : words) {
      const auto ab = oracle_vs_hecke(f.oracle, f.m, a, b, 16);
      const auto ba = oracle_vs_hecke(f.oracle, f.m, b, a, 16);
      CHECK(ab.pass);
      CHECK(ab.oracle == ba.oracle);
    }
}

TEST_CASE("oracle input errors") {
  Fixture f;
  const auto d = f.oracle.atom_D(f.s);
  CHECK_THROWS_AS(SoergelOracle::hom_graded_rank(d, d, 15), InputError);
  CHECK_THROWS_AS(SoergelOracle::hom_graded_rank(d, d, 2), InputError);
  CHECK_THROWS_AS(SoergelOracle(std::make_shared<AffineWeylGroup>(RootDatum::preset("A2"))), InputError);
  CHECK_THROWS_AS(SoergelOracle(std::make_shared<AffineWeylGroup>(RootDatum::preset("GL2"))), InputError);
  CHECK_NOTHROW(SoergelOracle(std::make_shared<AffineWeylGroup>(RootDatum::preset("A1"))));
}
