#include "hsw/laurent.hpp"

#include <doctest.h>

#include <map>
#include <random>

using hsw::Int;
using hsw::LaurentPoly;

namespace {

// Reference arithmetic on exponent -> coefficient maps.
using Terms = std::map<int, Int>;

Terms naive_mul(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Terms random_terms(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-5, 5), coef(-3, 3), count(0, 5);
  Terms t;
  for (int i = count(rng); i > 0; --i) t[exp(rng)] += coef(rng);
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

}  // namespace

TEST_CASE("laurent formatting") {
  const LaurentPoly p = LaurentPoly::v(-2) + 2 + LaurentPoly::v(2);
  CHECK(p.to_string() == "v^-2 + 2 + v^2");
  CHECK((-LaurentPoly::v(1)).to_string() == "-v");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((LaurentPoly::v(1) - LaurentPoly::v(-1)).to_string() == "-v^-1 + v");
  CHECK(LaurentPoly::monomial(3, 2).to_string('q') == "3q^2");
}

TEST_CASE("laurent arithmetic matches naive maps") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Terms a = random_terms(rng), b = random_terms(rng);
    const LaurentPoly pa = LaurentPoly::from_terms(a), pb = LaurentPoly::from_terms(b);
    CHECK((pa * pb).terms() == naive_mul(a, b));
    CHECK((pa + pb - pb) == pa);
    CHECK((pa * pb) == (pb * pa));
    CHECK(pa.bar().bar() == pa);
    CHECK((pa * pb).bar() == pa.bar() * pb.bar());
  }
}

TEST_CASE("zero has a unique representation") {
  const LaurentPoly p = LaurentPoly::v(3) - LaurentPoly::v(3);
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly());
  CHECK(p.in_negative_part());
}

TEST_CASE("sym_complete leaves a strictly negative remainder") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly f = LaurentPoly::from_terms(random_terms(rng));
    const LaurentPoly g = f.sym_complete();
    CHECK(g.is_bar_invariant());
    CHECK((f - g).in_negative_part());
  }
  CHECK((LaurentPoly::v(1) + 2).sym_complete() == LaurentPoly::v(-1) + 2 + LaurentPoly::v(1));
}

TEST_CASE("substitution and evaluation") {
  const LaurentPoly q = LaurentPoly::v(1) + LaurentPoly::v(2);
  CHECK(q.substitute(-2) == LaurentPoly::v(-2) + LaurentPoly::v(-4));
  CHECK(q.at_one() == 2);
  CHECK_THROWS(q.substitute(0));
}

TEST_CASE("coefficients beyond 64 bits") {
  LaurentPoly p = LaurentPoly::v(0) + LaurentPoly::v(1);
  LaurentPoly acc = 1;
  for (int i = 0; i < 80; ++i) acc *= p;
  Int binom = 1;
  for (int i = 0; i < 40; ++i) binom = binom * (80 - i) / (i + 1);
  CHECK(acc.coeff(40) == binom);
  CHECK(acc.at_one() == (Int(1) << 80));
}
