#include "hsw/qanalogue.hpp"

#include <doctest.h>

#include <memory>

using namespace hsw;

namespace {

struct Fixture {
  std::shared_ptr<const AffineWeylGroup> g;
  std::shared_ptr<const HeckeAlgebra> h;
  SphericalModule m;
  QAnalogue q;
  explicit Fixture(const char* name)
      : g(std::make_shared<AffineWeylGroup>(RootDatum::preset(name))),
        h(std::make_shared<HeckeAlgebra>(g)),
        m(h),
        q(g) {}
  const RootDatum& d() const { return g->datum(); }
};

LaurentPoly q(int e) { return LaurentPoly::v(e); }

// Weyl dimension formula: prod <eta + rho, a^vee> / <rho, a^vee>.
Int weyl_dimension(const RootDatum& d, const Weight& eta) {
  Int num = 1, den = 1;
  for (const auto& a : d.positive_roots()) {
    num *= (2 * eta + d.two_rho()).dot(a.coroot);
    den *= d.two_rho().dot(a.coroot);
  }
  return num / den;
}

Weight highest_root(const RootDatum& d) {
  const PositiveRoot* best = &d.positive_roots().front();
  for (const auto& a : d.positive_roots())
    if (a.height() > best->height()) best = &a;
  return best->root;
}

}  // namespace

TEST_CASE("q-Kostant partition function") {
  Fixture a1("A1"), a2("A2");
  CHECK(a1.q.kostant_q(Weight{0}) == 1);
  CHECK(a1.q.kostant_q(Weight{2}) == q(1));
  CHECK(a1.q.kostant_q(Weight{1}).is_zero());
  CHECK(a1.q.kostant_q(Weight{-2}).is_zero());
  const Weight theta = a2.d().simple_root(0) + a2.d().simple_root(1);
  CHECK(a2.q.kostant_q(theta) == q(1) + q(2));
  CHECK(a2.q.kostant_q(a2.d().simple_root(0) - a2.d().simple_root(1)).is_zero());
  // 2 alpha1 + alpha2: {a1,a1,a2}, {a1,theta}
  CHECK(a2.q.kostant_q(2 * a2.d().simple_root(0) + a2.d().simple_root(1)) == q(2) + q(3));
}

TEST_CASE("q-analogues of zero weight spaces give the exponents") {
  // M^0_theta(q) = sum of q^{m_i} over the exponents m_i.
  Fixture a1("A1"), a2("A2"), b2("B2"), g2("G2");
  CHECK(a1.q.lusztig_q(Weight{0}, Weight{2}) == q(1));
  CHECK(a2.q.lusztig_q(a2.d().zero(), highest_root(a2.d())) == q(1) + q(2));
  CHECK(b2.q.lusztig_q(b2.d().zero(), highest_root(b2.d())) == q(1) + q(3));
  CHECK(g2.q.lusztig_q(g2.d().zero(), highest_root(g2.d())) == q(1) + q(5));
  CHECK(a2.q.lusztig_q(Weight{1, 1}, Weight{1, 1}) == 1);
  CHECK_THROWS_AS(a2.q.lusztig_q(Weight{0, 0}, Weight{-1, 2}), InputError);
}

TEST_CASE("Freudenthal multiplicities") {
  Fixture a1("A1"), a2("A2");
  CHECK(a1.q.freudenthal_mult(Weight{2}, Weight{0}) == 1);
  CHECK(a2.q.freudenthal_mult(Weight{1, 1}, Weight{0, 0}) == 2);
  CHECK(a2.q.freudenthal_mult(Weight{1, 1}, Weight{1, 1}) == 1);
  CHECK(a2.q.freudenthal_mult(Weight{1, 1}, Weight{2, 2}) == 0);
  CHECK(a2.q.freudenthal_mult(Weight{2, 2}, Weight{0, 0}) == 3);
}

TEST_CASE("weight multiplicities sum to the Weyl dimension") {
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(name);
    Fixture f(name);
    for (const auto& eta : dominant_box(f.d(), name[1] == '3' ? 1 : 2)) {
      Int total = 0;
      for (const auto& chi : f.q.weights_of(eta)) total += f.q.freudenthal_mult(eta, chi);
      CHECK(total == weyl_dimension(f.d(), eta));
    }
  }
}

TEST_CASE("q = 1 specialization matches Freudenthal") {
  for (const char* name : {"A1", "A2", "B2"}) {
    CAPTURE(name);
    Fixture f(name);
    for (const auto& eta : dominant_box(f.d(), 2))
      for (const auto& chi : f.q.weights_of(eta)) {
        const LaurentPoly m = f.q.lusztig_q(chi, eta);
        CHECK(m.at_one() == f.q.freudenthal_mult(eta, chi));
        if (f.d().is_dominant(chi)) CHECK(m.nonnegative());
      }
  }
}

TEST_CASE("Kato identity examples") {
  Fixture f("A1");
  const KatoResult r0 = kato_check(f.m, f.q, Weight{2}, Weight{0});
  CHECK(r0.lhs == LaurentPoly::v(-2));
  CHECK(r0.rhs == LaurentPoly::v(-2));
  CHECK(r0.pass);
  const KatoResult r1 = kato_check(f.m, f.q, Weight{2}, Weight{2});
  CHECK(r1.lhs == 1);
  CHECK(r1.pass);
  const KatoResult r2 = kato_check(f.m, f.q, Weight{1}, Weight{1});
  CHECK(r2.lhs == 1);
  CHECK(r2.pass);
  CHECK_THROWS_AS(kato_check(f.m, f.q, Weight{-2}, Weight{0}), InputError);
}

TEST_CASE("dominant weights ordered by length") {
  Fixture f("A1");
  const auto ws = dominant_weights_by_length(*f.g, 6);
  REQUIRE(ws.size() == 8);
  for (int n = 0; n < 8; ++n) CHECK(ws[static_cast<std::size_t>(n)] == Weight{n});

  Fixture a2("A2");
  for (const auto& r : kato_grid(a2.m, a2.q, 3, 2)) CHECK(r.pass);
}
