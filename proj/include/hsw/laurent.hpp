#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hsw {

/// Arbitrary-precision integer used for every polynomial coefficient.
using Int = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable (v, or q when used for
/// q-analogues).
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends
/// are always nonzero, and the zero polynomial has no coefficients at all, so
/// structural equality is mathematical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: implicit constant embedding is intended
  LaurentPoly(const Int& c);  // NOLINT

  static LaurentPoly monomial(const Int& coeff, int exponent);
  /// v^exponent.
  static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_terms(const std::map<int, Int>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient. Undefined on zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int exponent) const;
  std::map<int, Int> terms() const;
  std::size_t num_terms() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Multiply by v^shift.
  LaurentPoly shifted(int shift) const;
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// v -> v^-1.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return *this == bar(); }
  /// The bar-invariant g with (f - g) supported in strictly negative degrees.
  LaurentPoly sym_complete() const;
  /// v -> v^k, k != 0.
  LaurentPoly substitute(int k) const;
  /// Value at v = 1.
  Int at_one() const;

  /// All coefficients >= 0.
  bool nonnegative() const;
  /// Every exponent < 0, i.e. the polynomial lies in v^-1 Z[v^-1].
  bool in_negative_part() const { return is_zero() || high() < 0; }

  /// "v^-2 + 2 + v^2", lowest exponent first.
  std::string to_string(char var = 'v') const;

  std::size_t hash() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace hsw
