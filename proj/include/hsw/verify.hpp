#pragma once

#include "hsw/qanalogue.hpp"
#include "hsw/soergel_oracle.hpp"

#include <cstdint>
#include <vector>

namespace hsw {

/// Length-zero elements w t_lambda with every coordinate of lambda in [-box, box].
std::vector<AffineElt> length_zero_elements(const AffineWeylGroup& g, int box);

/// Weights lambda with l(w_lambda) <= max_length. Coordinates are searched in
/// a box that is exhaustive for semisimple data.
std::vector<Weight> weights_by_length(const AffineWeylGroup& g, int max_length);

/// Breadth-first word length from the length-zero elements against the
/// closed length formula, for every element reached within max_length steps.
CheckReport verify_lengths(const AffineWeylGroup& g, int max_length);

/// For l(w_lambda) <= max_length: bar-invariance, leading coefficient 1,
/// lower coefficients in v^-1 Z[v^-1] and nonnegative, and nonnegative
/// decomposition of the Bott-Samelson character of a reduced word of w_lambda.
CheckReport verify_canonical_basis(const SphericalModule& m, int max_length);

/// act(project(T_x), T_y) = project(T_x T_y) on random pairs of length at
/// most max_length, and project(T_omega * fl_bs_char(s)) = bs_char(omega, s)
/// for all words of length <= word_length.
CheckReport verify_module_consistency(const SphericalModule& m, int pairs, int max_length, int word_length,
                                      std::uint64_t seed);

/// lusztig_q at q = 1 against Freudenthal multiplicities, positivity of
/// lusztig_q, and W-invariance of the q = 1 specialization.
CheckReport verify_qanalogue(const QAnalogue& q, int box);

CheckReport verify_kato(const SphericalModule& m, const QAnalogue& q, int max_length, int threads);

/// The default rank-one word set: (e,()), (omega,()) for every nontrivial
/// length-zero omega, (e,(s)), (e,(s0)), (e,(s,s0)), (e,(s0,s)).
std::vector<DecoratedWord> default_oracle_words(const SphericalModule& m);
CheckReport verify_oracle(const SoergelOracle& oracle, const SphericalModule& m, const std::vector<DecoratedWord>& words,
                          int cutoff, int threads);

struct VerifyOptions {
  int bernstein_box = 1;
  int max_length = 4;
  int qanalogue_box = 1;
  int module_pairs = 200;
  int cutoff = 16;
  int threads = 1;
  std::uint64_t seed = 20240601;
};

/// Every check above for one datum; the oracle grid only for rank-one data.
CheckReport verify_all(const std::shared_ptr<const HeckeAlgebra>& h, const VerifyOptions& options);

}  // namespace hsw
