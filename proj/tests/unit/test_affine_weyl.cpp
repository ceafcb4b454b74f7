#include "hsw/affine_weyl.hpp"
#include "hsw/hecke.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hsw;

namespace {

// Number of affine root hyperplanes <xi, a^vee> = k separating an interior
// point p of the fundamental alcove from x(p). p = rho / D.
int separating_hyperplanes(const AffineWeylGroup& g, const AffineElt& x) {
  const auto& d = g.datum();
  const long D = 2 * static_cast<long>(d.positive_roots().size()) + 1;
  // 2D * x(p) = w(2 rho) + 2D w(lambda)
  const Weight image = g.weyl().apply(x.w, d.two_rho()) + static_cast<int>(2 * D) * g.weyl().apply(x.w, x.lambda);
  int count = 0;
  for (const auto& a : d.positive_roots()) {
    const double b = static_cast<double>(image.dot(a.coroot)) / static_cast<double>(2 * D);
    count += static_cast<int>(std::abs(std::floor(b)));
  }
  return count;
}

AffineElt random_element(const AffineWeylGroup& g, std::mt19937& rng, int box) {
  std::uniform_int_distribution<int> w(0, g.weyl().size() - 1), c(-box, box);
  Weight lambda(g.rank());
  for (int i = 0; i < g.rank(); ++i) lambda[i] = c(rng);
  return {w(rng), lambda};
}

}  // namespace

TEST_CASE("length formula counts separating hyperplanes") {
  std::mt19937 rng(3);
  for (const char* name : {"A1", "A2", "B2", "G2", "C3", "GL3", "A1xGL2"}) {
    CAPTURE(name);
    const AffineWeylGroup g(RootDatum::preset(name));
    for (int trial = 0; trial < 300; ++trial) {
      const AffineElt x = random_element(g, rng, 3);
      CHECK(g.length(x) == separating_hyperplanes(g, x));
    }
  }
}

TEST_CASE("group laws") {
  std::mt19937 rng(5);
  for (const char* name : {"A2", "B2", "GL2"}) {
    CAPTURE(name);
    const AffineWeylGroup g(RootDatum::preset(name));
    for (int trial = 0; trial < 200; ++trial) {
      const AffineElt a = random_element(g, rng, 2), b = random_element(g, rng, 2), c = random_element(g, rng, 2);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.mul(a, g.inverse(a)) == g.identity());
      CHECK(g.length(a) == g.length(g.inverse(a)));
      const Weight xi = Weight::from_vector(std::vector<long>(static_cast<std::size_t>(g.rank()), 1));
      CHECK(g.act(g.mul(a, b), xi) == g.act(a, g.act(b, xi)));
    }
  }
}

TEST_CASE("simple reflections are involutions of length one") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1", "A1xGL2"}) {
    CAPTURE(name);
    const AffineWeylGroup g(RootDatum::preset(name));
    for (int k = 0; k < g.num_simples(); ++k) {
      const AffineElt& s = g.simple(k).elt;
      CHECK(g.length(s) == 1);
      CHECK(g.mul(s, s) == g.identity());
      for (int j = 0; j < g.num_simples(); ++j)
        if (j != k) CHECK(g.length(g.mul(s, g.simple(j).elt)) == 2);
    }
  }
}

TEST_CASE("affine Coxeter relations in A2") {
  const AffineWeylGroup g(RootDatum::preset("A2"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const AffineElt st = g.mul(g.simple(i).elt, g.simple(j).elt);
      CHECK(g.mul(st, g.mul(st, st)) == g.identity());
    }
}

TEST_CASE("reduced words reproduce the element") {
  std::mt19937 rng(9);
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(name);
    const AffineWeylGroup g(RootDatum::preset(name));
    for (int trial = 0; trial < 100; ++trial) {
      const AffineElt x = random_element(g, rng, 2);
      const ReducedWord rw = g.reduced_word(x);
      CHECK(g.length(rw.omega) == 0);
      CHECK(static_cast<int>(rw.word.size()) == g.length(x));
      AffineElt y = rw.omega;
      for (int k : rw.word) y = g.times_simple(y, k);
      CHECK(y == x);
    }
  }
}

TEST_CASE("length-zero elements permute the simple reflections") {
  for (const auto& [name, order] : {std::pair{"A1", 2}, std::pair{"A2", 3}, std::pair{"B2", 2}, std::pair{"G2", 1}}) {
    CAPTURE(name);
    const AffineWeylGroup g(RootDatum::preset(name));
    int found = 0;
    for (const auto& lambda : weight_box(g.rank(), 1))
      for (int w = 0; w < g.weyl().size(); ++w) {
        const AffineElt omega{w, lambda};
        if (g.length(omega) != 0) continue;
        ++found;
        for (int k = 0; k < g.num_simples(); ++k) {
          const AffineElt conj = g.mul(g.mul(omega, g.simple(k).elt), g.inverse(omega));
          bool simple = false;
          for (int j = 0; j < g.num_simples(); ++j) simple = simple || conj == g.simple(j).elt;
          CHECK(simple);
        }
      }
    CHECK(found == order);
  }
}

TEST_CASE("minimal coset representatives in A1") {
  const AffineWeylGroup g(RootDatum::preset("A1"));
  for (int n = 0; n <= 6; ++n) {
    CHECK(g.length(g.min_rep(Weight{n})) == n);
    if (n > 0) CHECK(g.length(g.min_rep(Weight{-n})) == n - 1);
  }
  // s0 = w_{-alpha}
  CHECK(g.min_rep(Weight{-2}) == g.simple(1).elt);
  // s t_{-varpi} has length zero
  CHECK(g.length({g.weyl().simple(0), Weight{-1}}) == 0);
}

TEST_CASE("coset decomposition lengths add") {
  std::mt19937 rng(13);
  const AffineWeylGroup g(RootDatum::preset("B2"));
  for (int trial = 0; trial < 200; ++trial) {
    const AffineElt x = random_element(g, rng, 3);
    const CosetDecomposition cd = g.coset_decompose(x);
    CHECK(g.mul(g.finite(cd.u), g.min_rep(cd.lambda)) == x);
  }
}

TEST_CASE("simple reflection tokens") {
  const AffineWeylGroup a1(RootDatum::preset("A1"));
  CHECK(a1.parse_word("s,s0") == std::vector<int>{0, 1});
  CHECK(a1.parse_word("s1, s0") == std::vector<int>{0, 1});
  CHECK(a1.parse_word("e").empty());
  CHECK(a1.word_label({1, 0}) == "s0,s1");
  CHECK_THROWS_AS(a1.parse_word("s2"), InputError);
  CHECK_THROWS_AS(a1.parse_word("t1"), InputError);

  const AffineWeylGroup prod(RootDatum::preset("A1xA2"));
  CHECK_THROWS_AS(prod.parse_simple("s0"), InputError);
  CHECK_THROWS_AS(prod.parse_simple("s"), InputError);
  CHECK(prod.parse_simple("s0:2") == 4);
  CHECK(prod.simple_label(3) == "s0:1");
  CHECK_THROWS_AS(prod.parse_simple("s0:3"), InputError);
  CHECK_THROWS_AS(prod.weyl_from_word({3}), InputError);
}
