#pragma once

#include "hsw/affine_weyl.hpp"
#include "hsw/laurent.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hsw {

/// Finitely supported Z[v, v^-1]-combination of the basis elements T_x of
/// the affine Hecke algebra. No zero coefficients are stored.
class HeckeElt {
 public:
  using Terms = std::unordered_map<AffineElt, LaurentPoly, AffineEltHash>;

  HeckeElt() = default;
  static HeckeElt basis(const AffineElt& x, LaurentPoly coeff = 1);

  void add(const AffineElt& x, const LaurentPoly& coeff);
  LaurentPoly coeff(const AffineElt& x) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  HeckeElt& operator*=(const LaurentPoly& scalar);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& s, HeckeElt a) { return a *= s; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// The affine Hecke algebra over Z[v, v^-1] in the T-basis, with quadratic
/// relation (T_s + v^-1)(T_s - v) = 0.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }

  HeckeElt one() const { return HeckeElt::basis(group_->identity()); }
  HeckeElt T(const AffineElt& x) const { return HeckeElt::basis(x); }
  /// C_s = T_s + v^-1 for the k-th simple reflection.
  HeckeElt C(int k) const;

  /// a * T_s, from T_y T_s = T_ys if l(ys) > l(y), else T_ys + (v - v^-1) T_y.
  HeckeElt mul_simple(const HeckeElt& a, int k) const;
  /// a * T_omega for l(omega) = 0.
  HeckeElt mul_length_zero(const HeckeElt& a, const AffineElt& omega) const;
  /// a * T_x through a reduced expression of x.
  HeckeElt mul_basis(const HeckeElt& a, const AffineElt& x) const;
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;

  /// (T_x)^-1 via T_s^-1 = T_s - (v - v^-1) and T_omega^-1 = T_{omega^-1}.
  HeckeElt inv_T(const AffineElt& x) const;

  /// Bernstein element theta_lambda = T_{t_mu} (T_{t_nu})^-1, lambda = mu - nu,
  /// using the smallest dominant nu with lambda + nu dominant. Memoized.
  HeckeElt theta(const Weight& lambda) const;
  /// Same element computed through the decomposition lambda = (lambda + nu) - nu.
  HeckeElt theta_via(const Weight& lambda, const Weight& nu) const;
  /// Smallest dominant nu with lambda + nu dominant.
  Weight dominant_shift(const Weight& lambda) const;

  /// Ring involution v -> v^-1, T_x -> (T_{x^-1})^-1.
  HeckeElt bar(const HeckeElt& a) const;

  /// Terms sorted by (length, w, lambda) for deterministic output.
  std::vector<std::pair<AffineElt, LaurentPoly>> sorted_terms(const HeckeElt& a) const;
  std::string to_string(const HeckeElt& a) const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  mutable std::mutex theta_mutex_;
  mutable std::unordered_map<Weight, HeckeElt, WeightHash> theta_cache_;
};

/// Outcome of one relation instance checked by a verifier.
struct CheckResult {
  std::string relation;
  std::string instance;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckResult> results;
  bool all_pass() const;
  std::size_t failures() const;
  void append(const CheckReport& other);
};

/// All weights of X with every coordinate in [-box, box].
std::vector<Weight> weight_box(int rank, int box);

/// Bernstein relations
///   (1) T_v T_w = T_vw when lengths add (v, w in W),
///   (2) theta_l theta_m = theta_{l+m},
///   (3) T_s theta_l = theta_l T_s when <l, a^vee> = 0,
///   (4) theta_l = T_s theta_{l-a} T_s when <l, a^vee> = 1,
/// for weights in the coordinate box; plus independence of theta from the
/// dominant decomposition.
CheckReport verify_bernstein(const HeckeAlgebra& h, int box);

/// For every affine simple s0: (T_s0 + v^-1)(T_s0 - v) = 0, and
/// T_s0 = T_y T_t T_y^-1 for some finite simple t and y with
/// s0 y = y t and l(s0 y) = l(y) + 1.
CheckReport verify_quadratic_affine(const HeckeAlgebra& h);

}  // namespace hsw
