#pragma once

#include "hsw/spherical.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hsw {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in u and hbar with rational coefficients, both of degree 2.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(long long c);  // NOLINT
  BiPoly(const Rational& c);  // NOLINT
  static BiPoly term(const Rational& c, int u_exp, int hbar_exp = 0);
  static BiPoly u() { return term(1, 1); }
  static BiPoly hbar() { return term(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  Rational coeff(int u_exp, int hbar_exp = 0) const;
  bool has_hbar() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  /// Drop every term containing hbar.
  BiPoly at_hbar_zero() const;
  /// Exact division by hbar; throws std::logic_error if not divisible.
  BiPoly divide_by_hbar() const;
  /// Every term has 2 (u_exp + hbar_exp) == degree.
  bool homogeneous_of(int degree) const;

  std::string to_string() const;

 private:
  void add_term(const std::pair<int, int>& exps, const Rational& c);
  std::map<std::pair<int, int>, Rational> terms_;
};

/// Square or rectangular matrix of BiPoly entries, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BiPoly& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  const BiPoly& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y);
  friend PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) = default;
  PolyMatrix scaled(const BiPoly& p) const;
  PolyMatrix at_hbar_zero() const;
  PolyMatrix divide_by_hbar() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BiPoly> a_;
};

/// p(L), with u replaced by the matrix L and hbar acting as a scalar.
PolyMatrix evaluate_at(const BiPoly& p, const PolyMatrix& L);

/// Graded module over C = O(t* x_{t*/W} T(t*/W)) for a rank-one datum,
/// O(t*) = Q[u], free as a right O(t*)-module on generators of the given
/// degrees. Column j of a matrix holds the image of generator j.
///
/// `left` is the left action of u on the hbar-deformed bimodule; `theta` is
/// the action of the tangent generator dy for y = u^2, namely
/// hbar^-1 (left(y) - right(y)) at hbar = 0.
struct GradedCModule {
  std::vector<int> degrees;
  PolyMatrix left;
  PolyMatrix theta;

  int size() const { return static_cast<int>(degrees.size()); }
  /// Graded rank over O(t*): sum of v^degree.
  LaurentPoly graded_rank() const;

  /// Computes theta from the left action and validates homogeneity and
  /// that theta commutes with the left action at hbar = 0.
  static GradedCModule from_left_action(std::vector<int> degrees, PolyMatrix left);
};

/// Raised when the Hom Hilbert series has not stabilized at the cutoff.
class StabilizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HomResult {
  LaurentPoly graded_rank;
  /// dim Hom^d for each computed degree d.
  std::map<int, long> dimensions;
  int cutoff = 0;
};

/// Builds the atoms D_s, E_w and Bott-Samelson tensor products for a datum
/// of rank 1 and semisimple rank 1 (type A1, any isogeny).
class SoergelOracle {
 public:
  explicit SoergelOracle(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }

  /// g . u = a u + c hbar under the level-hbar affine action on t* (+) Q hbar.
  std::pair<int, long> act_on_u(const AffineElt& g) const;

  /// O[h] (x)_{O[h]^s} O[h] <-1>, basis 1(x)1 (degree -1), u'(x)1 (degree 1)
  /// with u' the s-anti-invariant shift of u.
  GradedCModule atom_D(int simple_index) const;
  GradedCModule atom_D_finite(int simple_index) const;
  GradedCModule atom_D_affine(int simple_index) const;
  /// Rank one, degree 0, left action of f given by right action of w^-1 . f.
  GradedCModule atom_E(const AffineElt& w) const;

  /// E_omega (x) D_s1 (x) ... (x) D_sr.
  GradedCModule bott_samelson(const AffineElt& omega, const std::vector<int>& word) const;

  /// Tensor over O(t*)[hbar]; theta is cross-checked against the Leibniz rule.
  static GradedCModule tensor(const GradedCModule& m, const GradedCModule& n);

  /// dim Hom^d(M, N) of O(t*)-linear theta-equivariant maps raising degree by d.
  static long hom_dimension(const GradedCModule& m, const GradedCModule& n, int d);
  /// Graded rank of Hom(M, N) from its Hilbert series up to `cutoff`,
  /// multiplied by (1 - v^2). Throws InputError if the cutoff is odd or
  /// too small, StabilizationError on a nonzero residue.
  static HomResult hom_graded_rank(const GradedCModule& m, const GradedCModule& n, int cutoff);

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
};

/// A decorated word (omega, s) with l(omega) = 0.
struct DecoratedWord {
  AffineElt omega;
  std::vector<int> word;
};

struct OracleComparison {
  LaurentPoly oracle;
  LaurentPoly predicted;
  bool pass = false;
};

/// Compares the oracle graded rank of Hom(D(omega, s), D(omega', t)) with
/// <m(omega, s), m(omega', t)>.
OracleComparison oracle_vs_hecke(const SoergelOracle& oracle, const SphericalModule& sph, const DecoratedWord& left,
                                 const DecoratedWord& right, int cutoff);

}  // namespace hsw
