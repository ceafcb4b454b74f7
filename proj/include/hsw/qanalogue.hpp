#pragma once

#include "hsw/spherical.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace hsw {

/// Lusztig's q-analogue of weight multiplicity and its q = 1 oracle.
/// Polynomials in q are LaurentPoly with nonnegative exponents.
class QAnalogue {
 public:
  explicit QAnalogue(std::shared_ptr<const AffineWeylGroup> group);

  const RootDatum& datum() const { return group_->datum(); }
  const WeylGroup& weyl() const { return group_->weyl(); }

  /// Sum over (n_a) with sum n_a a = beta of q^{sum n_a}; 0 outside Z>=0 Phi+.
  LaurentPoly kostant_q(const Weight& beta) const;
  /// M^chi_eta(q) = sum_w (-1)^l(w) P_q(w(eta + rho) - (chi + rho)). eta dominant.
  LaurentPoly lusztig_q(const Weight& chi, const Weight& eta) const;
  /// dim V(eta)_chi by Freudenthal's recursion. eta dominant.
  Int freudenthal_mult(const Weight& eta, const Weight& chi) const;

  /// All weights of V(eta) (eta dominant), sorted.
  std::vector<Weight> weights_of(const Weight& eta) const;
  /// The dominant W-conjugate.
  Weight dominant_conjugate(const Weight& lambda) const;
  /// eta - nu in Z>=0 Phi+.
  bool dominates(const Weight& eta, const Weight& nu) const;
  /// -w0(lambda).
  Weight dual(const Weight& lambda) const { return -weyl().apply(weyl().longest(), lambda); }

 private:
  /// Sum_{a > 0} <x, a^vee><y, a^vee>: a W-invariant form, positive definite on the root span.
  long form(const Weight& x, const Weight& y) const;

  std::shared_ptr<const AffineWeylGroup> group_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<long>, LaurentPoly> kostant_cache_;
};

struct KatoResult {
  Weight lambda;
  Weight mu;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool pass = false;
};

/// lhs = v^{l(w_{-w0 mu}) - l(w_{-mu})} [m_{-mu}] b_{-w0 lambda},
/// rhs = M^{-w0 mu}_{-w0 lambda}(v^-2).
KatoResult kato_check(const SphericalModule& m, const QAnalogue& q, const Weight& lambda, const Weight& mu);

/// Dominant lambda with l(w_{-lambda}) <= max_length, sorted by (length, lambda).
std::vector<Weight> dominant_weights_by_length(const AffineWeylGroup& g, int max_length);

/// Dominant weights with every fundamental-weight coordinate in [0, box]
/// (on the semisimple part; central coordinates zero).
std::vector<Weight> dominant_box(const RootDatum& d, int box);

/// Kato check over every pair from dominant_weights_by_length, run on up to
/// `threads` workers. Rows are ordered by (lambda, mu).
std::vector<KatoResult> kato_grid(const SphericalModule& m, const QAnalogue& q, int max_length, int threads);

}  // namespace hsw
