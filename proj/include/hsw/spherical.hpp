#pragma once

#include "hsw/hecke.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hsw {

/// Finitely supported Z[v, v^-1]-combination of the basis m_lambda of the
/// spherical module. No zero coefficients are stored.
class SphElt {
 public:
  using Terms = std::unordered_map<Weight, LaurentPoly, WeightHash>;

  SphElt() = default;
  static SphElt basis(const Weight& lambda, LaurentPoly coeff = 1);

  void add(const Weight& lambda, const LaurentPoly& coeff);
  LaurentPoly coeff(const Weight& lambda) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  SphElt& operator+=(const SphElt& other);
  SphElt& operator-=(const SphElt& other);
  SphElt& operator*=(const LaurentPoly& scalar);
  friend SphElt operator+(SphElt a, const SphElt& b) { return a += b; }
  friend SphElt operator-(SphElt a, const SphElt& b) { return a -= b; }
  friend SphElt operator*(const LaurentPoly& s, SphElt a) { return a *= s; }
  friend bool operator==(const SphElt& a, const SphElt& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// b_lambda = m_lambda + sum_{mu} c_mu m_mu, c_mu in v^-1 Z[v^-1],
/// l(w_mu) < l(w_lambda), bar-invariant.
struct CanonicalBasisElt {
  Weight lambda;
  SphElt expansion;
};

/// The spherical right module M_sph = M_triv (x)_{H_W} H_aff, with
/// m_lambda = m_0 T_{w_lambda}.
class SphericalModule {
 public:
  explicit SphericalModule(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const AffineWeylGroup& group() const { return hecke_->group(); }

  SphElt m(const Weight& lambda) const { return SphElt::basis(lambda); }
  /// l(w_lambda).
  int weight_length(const Weight& lambda) const { return group().length(group().min_rep(lambda)); }

  /// m_0 * T_x = v^{l(u)} m_lambda for x = u w_lambda.
  SphElt project_basis(const AffineElt& x) const;
  SphElt project(const HeckeElt& h) const;

  /// Right action of T_s (k-th simple reflection).
  SphElt act_simple(const SphElt& m, int k) const;
  SphElt act_length_zero(const SphElt& m, const AffineElt& omega) const;
  SphElt act(const SphElt& m, const HeckeElt& h) const;

  /// m(omega, s) = m_0 T_omega (T_s1 + v^-1) ... (T_sr + v^-1); omega of length 0.
  SphElt bs_char(const AffineElt& omega, const std::vector<int>& word) const;
  /// (T_s1 + v^-1) ... (T_sr + v^-1) in H_aff.
  HeckeElt fl_bs_char(const std::vector<int>& word) const;

  /// <v^i m_l, v^j m_m> = v^{-i-j} delta_{l,m}, extended biadditively.
  LaurentPoly pairing(const SphElt& a, const SphElt& b) const;
  /// <m(omega, s), m(omega', t)>.
  LaurentPoly hom_rank(const AffineElt& omega, const std::vector<int>& word, const AffineElt& omega2,
                       const std::vector<int>& word2) const;

  /// Semilinear involution with bar(m_0) = m_0, bar(m_0 h) = m_0 bar(h).
  SphElt bar(const SphElt& m) const;

  /// Memoized; throws std::logic_error if triangularity fails.
  CanonicalBasisElt canonical_basis(const Weight& lambda) const;
  /// Coefficients c_lambda with m = sum c_lambda b_lambda (characteristic 0).
  std::map<Weight, LaurentPoly> decompose(const SphElt& m) const;
  std::map<Weight, LaurentPoly> decompose_bs(const AffineElt& omega, const std::vector<int>& word) const {
    return decompose(bs_char(omega, word));
  }

  /// Length-zero element omega = w_lambda; throws if l(w_lambda) != 0.
  AffineElt omega_from_weight(const Weight& lambda) const;

  /// Terms sorted by (l(w_lambda), lambda).
  std::vector<std::pair<Weight, LaurentPoly>> sorted_terms(const SphElt& m) const;
  std::string to_string(const SphElt& m) const;

 private:
  /// Support weight with maximal l(w_mu) satisfying pred, ties broken by weight order.
  template <typename Pred>
  const Weight* top_weight(const SphElt& m, Pred pred) const;

  std::shared_ptr<const HeckeAlgebra> hecke_;
  mutable std::shared_mutex cb_mutex_;
  mutable std::unordered_map<Weight, CanonicalBasisElt, WeightHash> cb_cache_;
};

}  // namespace hsw
