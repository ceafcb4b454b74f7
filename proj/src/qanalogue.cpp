#include "hsw/qanalogue.hpp"

#include "hsw/parallel.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace hsw {

QAnalogue::QAnalogue(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

LaurentPoly QAnalogue::kostant_q(const Weight& beta) const {
  const auto coords = datum().root_coordinates(beta);
  if (!coords || std::any_of(coords->begin(), coords->end(), [](long c) { return c < 0; })) return {};
  {
    std::lock_guard lock(mutex_);
    if (auto it = kostant_cache_.find(*coords); it != kostant_cache_.end()) return it->second;
  }

  // count(k, rest): partitions of `rest` using only positive roots k, k+1, ...
  const auto& roots = datum().positive_roots();
  std::map<std::pair<std::size_t, std::vector<long>>, LaurentPoly> memo;
  std::function<LaurentPoly(std::size_t, const std::vector<long>&)> count = [&](std::size_t k,
                                                                                  const std::vector<long>& rest) {
    if (std::all_of(rest.begin(), rest.end(), [](long c) { return c == 0; })) return LaurentPoly(1);
    if (k == roots.size()) return LaurentPoly();
    const auto key = std::make_pair(k, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    LaurentPoly total;
    std::vector<long> cur = rest;
    for (int n = 0;; ++n) {
      total += count(k + 1, cur).shifted(n);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= roots[k].root_coords[i];
        ok = ok && cur[i] >= 0;
      }
      if (!ok) break;
    }
    memo.emplace(key, total);
    return total;
  };
  LaurentPoly result = count(0, *coords);

  std::lock_guard lock(mutex_);
  kostant_cache_.emplace(*coords, result);
  return result;
}

LaurentPoly QAnalogue::lusztig_q(const Weight& chi, const Weight& eta) const {
  if (chi.rank() != datum().rank() || eta.rank() != datum().rank()) throw InputError("weight has the wrong rank");
  if (!datum().is_dominant(eta)) throw InputError("highest weight must be dominant");
  const Weight& two_rho = datum().two_rho();
  LaurentPoly total;
  for (int w = 0; w < weyl().size(); ++w) {
    const Weight shift2 = weyl().apply(w, two_rho) - two_rho;
    Weight shift(datum().rank());
    for (int i = 0; i < datum().rank(); ++i) {
      if (shift2[i] % 2 != 0) throw std::logic_error("w(rho) - rho is not integral");
      shift[i] = shift2[i] / 2;
    }
    const LaurentPoly p = kostant_q(weyl().apply(w, eta) + shift - chi);
    if (weyl().sign(w) > 0) {
      total += p;
    } else {
      total -= p;
    }
  }
  return total;
}

long QAnalogue::form(const Weight& x, const Weight& y) const {
  long total = 0;
  for (const auto& a : datum().positive_roots()) total += x.dot(a.coroot) * y.dot(a.coroot);
  return total;
}

Weight QAnalogue::dominant_conjugate(const Weight& lambda) const {
  Weight cur = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < datum().semisimple_rank(); ++i) {
      if (cur.dot(datum().simple_coroot(i)) < 0) {
        cur = datum().reflect(i, cur);
        changed = true;
      }
    }
  }
  return cur;
}

bool QAnalogue::dominates(const Weight& eta, const Weight& nu) const {
  const auto coords = datum().root_coordinates(eta - nu);
  return coords && std::all_of(coords->begin(), coords->end(), [](long c) { return c >= 0; });
}

Int QAnalogue::freudenthal_mult(const Weight& eta, const Weight& chi) const {
  if (chi.rank() != datum().rank() || eta.rank() != datum().rank()) throw InputError("weight has the wrong rank");
  if (!datum().is_dominant(eta)) throw InputError("highest weight must be dominant");
  const Weight target = dominant_conjugate(chi);
  if (!dominates(eta, target)) return 0;

  const Weight& two_rho = datum().two_rho();
  const long top = form(eta, eta);
  std::map<Weight, Int> memo;
  // Multiplicities are W-invariant, so only dominant weights are stored.
  std::function<Int(const Weight&)> mult = [&](const Weight& mu) -> Int {
    if (mu == eta) return 1;
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    Int sum = 0;
    for (const auto& a : datum().positive_roots()) {
      for (int k = 1;; ++k) {
        const Weight nu = mu + k * a.root;
        const Weight d = dominant_conjugate(nu);
        if (!dominates(eta, d)) break;  // root strings through weights are unbroken
        sum += Int(form(nu, a.root)) * mult(d);
      }
    }
    const long denom = top - form(mu, mu) + form(eta - mu, two_rho);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive");
    const Int num = 2 * sum;
    if (num % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    const Int m = num / denom;
    memo.emplace(mu, m);
    return m;
  };
  return mult(target);
}

std::vector<Weight> QAnalogue::weights_of(const Weight& eta) const {
  if (!datum().is_dominant(eta)) throw InputError("highest weight must be dominant");
  // Every weight other than eta has some mu + alpha_i among the weights, so
  // walking down by simple roots from eta reaches all of them.
  std::set<Weight> seen{eta};
  std::deque<Weight> queue{eta};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (int i = 0; i < datum().semisimple_rank(); ++i) {
      const Weight next = mu - datum().simple_root(i);
      if (seen.count(next) || !dominates(eta, dominant_conjugate(next))) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------

KatoResult kato_check(const SphericalModule& m, const QAnalogue& q, const Weight& lambda, const Weight& mu) {
  const auto& d = q.datum();
  if (!d.is_dominant(lambda) || !d.is_dominant(mu)) throw InputError("kato_check needs dominant weights");
  const Weight lam_dual = q.dual(lambda);
  const Weight mu_dual = q.dual(mu);
  const LaurentPoly stalk = m.canonical_basis(lam_dual).expansion.coeff(-mu);
  const int shift = m.weight_length(mu_dual) - m.weight_length(-mu);
  KatoResult r{lambda, mu, stalk.shifted(shift), q.lusztig_q(mu_dual, lam_dual).substitute(-2), false};
  r.pass = r.lhs == r.rhs;
  return r;
}

std::vector<Weight> dominant_box(const RootDatum& d, int box) {
  std::vector<Weight> out;
  const int n = d.semisimple_rank();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  while (true) {
    Weight w = d.zero();
    for (int i = 0; i < n; ++i) w += c[static_cast<std::size_t>(i)] * d.fundamental_weights()[static_cast<std::size_t>(i)];
    out.push_back(w);
    int i = 0;
    while (i < n && c[static_cast<std::size_t>(i)] == box) c[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++c[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> dominant_weights_by_length(const AffineWeylGroup& g, int max_length) {
  // For dominant lambda, l(w_{-lambda}) >= l(t_{-lambda}) - |Phi+| and
  // l(t_{-lambda}) >= sum of the fundamental coordinates.
  const auto& d = g.datum();
  const int n = d.semisimple_rank();
  const int budget = max_length + static_cast<int>(d.positive_roots().size());
  std::vector<std::pair<int, Weight>> found;
  std::function<void(int, int, const Weight&)> walk = [&](int i, int left, const Weight& partial) {
    if (i == n) {
      const int len = g.length(g.min_rep(-partial));
      if (len <= max_length) found.emplace_back(len, partial);
      return;
    }
    for (int c = 0; c <= left; ++c)
      walk(i + 1, left - c, partial + c * d.fundamental_weights()[static_cast<std::size_t>(i)]);
  };
  walk(0, budget, d.zero());
  std::sort(found.begin(), found.end());
  std::vector<Weight> out;
  for (auto& [len, w] : found) out.push_back(w);
  return out;
}

std::vector<KatoResult> kato_grid(const SphericalModule& m, const QAnalogue& q, int max_length, int threads) {
  const auto weights = dominant_weights_by_length(m.group(), max_length);
  std::vector<std::pair<Weight, Weight>> pairs;
  for (const auto& lambda : weights)
    for (const auto& mu : weights) pairs.emplace_back(lambda, mu);
  std::sort(pairs.begin(), pairs.end());
  std::vector<KatoResult> rows(pairs.size());
  parallel_for(pairs.size(), threads,
               [&](std::size_t i) { rows[i] = kato_check(m, q, pairs[i].first, pairs[i].second); });
  return rows;
}

}  // namespace hsw
