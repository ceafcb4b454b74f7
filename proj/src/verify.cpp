#include "hsw/verify.hpp"

#include "hsw/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hsw {

namespace {

std::string str(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

// Elements reachable from the length-zero elements by at most max_length
// right multiplications by simple reflections, with their BFS depth.
std::unordered_map<AffineElt, int, AffineEltHash> bfs_ball(const AffineWeylGroup& g, int max_length) {
  std::unordered_map<AffineElt, int, AffineEltHash> depth;
  std::vector<AffineElt> frontier = length_zero_elements(g, 1);
  for (const auto& x : frontier) depth.emplace(x, 0);
  for (int d = 1; d <= max_length; ++d) {
    std::vector<AffineElt> next;
    for (const auto& x : frontier)
      for (int k = 0; k < g.num_simples(); ++k) {
        const AffineElt y = g.times_simple(x, k);
        if (depth.emplace(y, d).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return depth;
}

}  // namespace

std::vector<AffineElt> length_zero_elements(const AffineWeylGroup& g, int box) {
  std::vector<AffineElt> out;
  for (const auto& lambda : weight_box(g.rank(), box))
    for (int w = 0; w < g.weyl().size(); ++w)
      if (g.length({w, lambda}) == 0) out.push_back({w, lambda});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> weights_by_length(const AffineWeylGroup& g, int max_length) {
  // w_lambda has length <= max_length, so it lies in the BFS ball.
  std::set<Weight> found;
  for (const auto& [x, d] : bfs_ball(g, max_length))
    if (g.length(g.min_rep(x.lambda)) <= max_length) found.insert(x.lambda);
  std::vector<Weight> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    return g.length(g.min_rep(a)) < g.length(g.min_rep(b));
  });
  return out;
}

CheckReport verify_lengths(const AffineWeylGroup& g, int max_length) {
  CheckReport report;
  std::vector<std::pair<AffineElt, int>> ball;
  for (const auto& entry : bfs_ball(g, max_length)) ball.push_back(entry);
  std::sort(ball.begin(), ball.end());
  for (const auto& [x, d] : ball)
    report.results.push_back({"length formula = BFS word length", describe(g, x), g.length(x) == d});
  return report;
}

CheckReport verify_canonical_basis(const SphericalModule& m, int max_length) {
  CheckReport report;
  const auto& g = m.group();
  for (const auto& lambda : weights_by_length(g, max_length)) {
    const std::string inst = "lambda=" + str(lambda);
    SphElt b;
    try {
      b = m.canonical_basis(lambda).expansion;
    } catch (const std::logic_error& e) {
      report.results.push_back({"canonical basis exists", inst + ": " + e.what(), false});
      continue;
    }
    report.results.push_back({"b bar-invariant", inst, m.bar(b) == b});
    report.results.push_back({"b leading coefficient 1", inst, b.coeff(lambda) == LaurentPoly(1)});
    bool lower = true, positive = true;
    for (const auto& [mu, c] : b.terms()) {
      if (mu == lambda) continue;
      lower = lower && c.in_negative_part() && m.weight_length(mu) < m.weight_length(lambda);
      positive = positive && c.nonnegative();
    }
    report.results.push_back({"b lower terms in v^-1 Z[v^-1]", inst, lower});
    report.results.push_back({"b coefficients nonnegative", inst, positive});

    const ReducedWord rw = g.reduced_word(g.min_rep(lambda));
    const SphElt bs = m.bs_char(rw.omega, rw.word);
    const auto dec = m.decompose(bs);
    SphElt rebuilt;
    bool dec_positive = true;
    for (const auto& [mu, c] : dec) {
      dec_positive = dec_positive && c.nonnegative();
      SphElt part = m.canonical_basis(mu).expansion;
      part *= c;
      rebuilt += part;
    }
    report.results.push_back({"bs_char bar-invariant", inst, m.bar(bs) == bs});
    report.results.push_back({"decomposition nonnegative and exact", inst, dec_positive && rebuilt == bs});
  }
  return report;
}

CheckReport verify_module_consistency(const SphericalModule& m, int pairs, int max_length, int word_length,
                                      std::uint64_t seed) {
  CheckReport report;
  const auto& g = m.group();
  const auto& h = m.hecke();
  const auto omegas = length_zero_elements(g, 1);

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto random_element = [&] {
    AffineElt x = omegas[pick(omegas.size())];
    const int len = static_cast<int>(pick(static_cast<std::size_t>(max_length) + 1));
    for (int i = 0; i < len; ++i) x = g.times_simple(x, static_cast<int>(pick(static_cast<std::size_t>(g.num_simples()))));
    return x;
  };
  for (int p = 0; p < pairs; ++p) {
    const AffineElt x = random_element();
    const AffineElt y = random_element();
    const bool ok = m.act(m.project(h.T(x)), h.T(y)) == m.project(h.mul(h.T(x), h.T(y)));
    report.results.push_back({"act(project(T_x), T_y) = project(T_x T_y)", describe(g, x) + " ; " + describe(g, y), ok});
  }

  std::vector<std::vector<int>> words{{}};
  for (std::size_t start = 0; start < words.size(); ++start) {
    if (static_cast<int>(words[start].size()) == word_length) continue;
    for (int k = 0; k < g.num_simples(); ++k) {
      auto w = words[start];
      w.push_back(k);
      words.push_back(std::move(w));
    }
  }
  for (const auto& omega : omegas)
    for (const auto& word : words) {
      const bool ok = m.project(h.mul(h.T(omega), m.fl_bs_char(word))) == m.bs_char(omega, word);
      report.results.push_back(
          {"project(T_omega fl_bs_char(s)) = bs_char(omega, s)", describe(g, omega) + " s=" + g.word_label(word), ok});
    }
  return report;
}

CheckReport verify_qanalogue(const QAnalogue& q, int box) {
  CheckReport report;
  const auto& W = q.weyl();
  for (const auto& eta : dominant_box(q.datum(), box)) {
    for (const auto& chi : q.weights_of(eta)) {
      const std::string inst = "eta=" + str(eta) + " chi=" + str(chi);
      const LaurentPoly m = q.lusztig_q(chi, eta);
      const Int f = q.freudenthal_mult(eta, chi);
      report.results.push_back({"lusztig_q(1) = Freudenthal multiplicity", inst, m.at_one() == f});
      // Positivity is a statement about dominant chi only.
      if (q.datum().is_dominant(chi))
        report.results.push_back({"lusztig_q nonnegative", inst, m.nonnegative() && (m.is_zero() || m.low() >= 0)});
      bool invariant = true;
      for (int w = 0; w < W.size(); ++w) invariant = invariant && q.lusztig_q(W.apply(w, chi), eta).at_one() == f;
      report.results.push_back({"lusztig_q(1) W-invariant", inst, invariant});
    }
  }
  return report;
}

CheckReport verify_kato(const SphericalModule& m, const QAnalogue& q, int max_length, int threads) {
  CheckReport report;
  for (const auto& r : kato_grid(m, q, max_length, threads))
    report.results.push_back({"Kato identity", "lambda=" + str(r.lambda) + " mu=" + str(r.mu), r.pass});
  return report;
}

std::vector<DecoratedWord> default_oracle_words(const SphericalModule& m) {
  const auto& g = m.group();
  const AffineElt e = g.identity();
  std::vector<DecoratedWord> words{{e, {}}};
  for (const auto& omega : length_zero_elements(g, 1))
    if (!(omega == e)) words.push_back({omega, {}});
  int s = -1, s0 = -1;
  for (int k = 0; k < g.num_simples(); ++k) (g.simple(k).kind == SimpleReflection::Kind::finite ? s : s0) = k;
  words.push_back({e, {s}});
  words.push_back({e, {s0}});
  words.push_back({e, {s, s0}});
  words.push_back({e, {s0, s}});
  return words;
}

CheckReport verify_oracle(const SoergelOracle& oracle, const SphericalModule& m, const std::vector<DecoratedWord>& words,
                          int cutoff, int threads) {
  const auto& g = m.group();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) pairs.emplace_back(i, j);
  CheckReport report;
  report.results.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto& a = words[pairs[k].first];
    const auto& b = words[pairs[k].second];
    const std::string inst = "(" + describe(g, a.omega) + "; " + g.word_label(a.word) + ") vs (" +
                             describe(g, b.omega) + "; " + g.word_label(b.word) + ")";
    bool ok = false;
    try {
      ok = oracle_vs_hecke(oracle, m, a, b, cutoff).pass;
    } catch (const StabilizationError&) {
      ok = false;
    }
    report.results[k] = {"oracle Hom rank = <m, m'>", inst, ok};
  });
  return report;
}

CheckReport verify_all(const std::shared_ptr<const HeckeAlgebra>& h, const VerifyOptions& options) {
  const auto& g = h->group();
  SphericalModule sph(h);
  QAnalogue q(h->group_ptr());
  CheckReport report = verify_bernstein(*h, options.bernstein_box);
  report.append(verify_quadratic_affine(*h));
  report.append(verify_lengths(g, options.max_length));
  report.append(verify_canonical_basis(sph, options.max_length));
  report.append(verify_module_consistency(sph, options.module_pairs, options.max_length, 3, options.seed));
  report.append(verify_qanalogue(q, options.qanalogue_box));
  report.append(verify_kato(sph, q, options.max_length, options.threads));
  if (g.rank() == 1 && g.datum().semisimple_rank() == 1) {
    SoergelOracle oracle(h->group_ptr());
    report.append(verify_oracle(oracle, sph, default_oracle_words(sph), options.cutoff, options.threads));
  }
  return report;
}

}  // namespace hsw
