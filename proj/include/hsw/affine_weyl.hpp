#pragma once

#include "hsw/root_datum.hpp"

#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hsw {

/// The element w * t_lambda of W_aff = W |x X. `w` indexes the finite Weyl
/// group of the owning AffineWeylGroup.
///
/// Multiplication: (w1 t_l1)(w2 t_l2) = (w1 w2) t_{w2^-1 l1 + l2}.
/// Level-one action on X: (w t_l) . xi = w(xi + l).
struct AffineElt {
  int w = 0;
  Weight lambda;

  friend bool operator==(const AffineElt& a, const AffineElt& b) = default;
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.lambda < b.lambda;
  }
};

struct AffineEltHash {
  std::size_t operator()(const AffineElt& x) const {
    return x.lambda.hash() * 31U + static_cast<std::size_t>(x.w);
  }
};

struct SimpleReflection {
  enum class Kind { finite, affine };
  Kind kind = Kind::finite;
  /// Simple-root index for finite simples, component index for affine ones.
  int index = 0;
  AffineElt elt;
};

/// x = omega * s_{word[0]} ... s_{word[r-1]} with l(omega) = 0 and r = l(x).
/// Entries of `word` index AffineWeylGroup::simple_reflections().
struct ReducedWord {
  AffineElt omega;
  std::vector<int> word;
};

/// x = u * w_lambda with l(x) = l(u) + l(w_lambda).
struct CosetDecomposition {
  int u = 0;
  Weight lambda;
};

/// Extended affine Weyl group of a root datum, with the length function,
/// simple reflections (finite ones first, then one affine simple per
/// irreducible component), reduced words and minimal coset representatives.
///
/// Reduced words and minimal representatives are memoized; the caches take a
/// shared lock for lookups and an exclusive lock for insertion, so one
/// instance can be shared between threads.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  const WeylGroup& weyl() const { return weyl_; }
  int rank() const { return datum_.rank(); }

  AffineElt identity() const { return {weyl_.identity(), datum_.zero()}; }
  AffineElt translation(const Weight& lambda) const { return {weyl_.identity(), lambda}; }
  AffineElt finite(int w) const { return {w, datum_.zero()}; }

  AffineElt mul(const AffineElt& a, const AffineElt& b) const;
  AffineElt inverse(const AffineElt& x) const;
  int length(const AffineElt& x) const;
  /// (w t_lambda) . xi = w(xi + lambda).
  Weight act(const AffineElt& x, const Weight& xi) const;

  const std::vector<SimpleReflection>& simple_reflections() const { return simples_; }
  const SimpleReflection& simple(int k) const { return simples_[static_cast<std::size_t>(k)]; }
  int num_simples() const { return static_cast<int>(simples_.size()); }
  AffineElt times_simple(const AffineElt& x, int k) const { return mul(x, simple(k).elt); }

  /// Repeatedly strips the first right descent (simples scanned in index
  /// order) until length zero.
  ReducedWord reduced_word(const AffineElt& x) const;
  /// The unique length-zero omega with x in omega * W_aff^Cox.
  AffineElt omega_part(const AffineElt& x) const { return reduced_word(x).omega; }
  /// w_lambda: the shortest element of W t_lambda.
  AffineElt min_rep(const Weight& lambda) const;
  CosetDecomposition coset_decompose(const AffineElt& x) const;

  /// "s1".."sn" (or "s" in semisimple rank 1) for finite simples, "s0" for
  /// the affine simple of a single component, "s0:c" (1-based c) otherwise.
  int parse_simple(std::string_view token) const;
  std::string simple_label(int k) const;
  /// Comma-separated list of simple labels; "" or "e" is the empty word.
  std::vector<int> parse_word(std::string_view text) const;
  std::string word_label(const std::vector<int>& word) const;

  /// Element from a finite-Weyl word in simple-root indices.
  int weyl_from_word(const std::vector<int>& simple_indices) const;

 private:
  RootDatum datum_;
  WeylGroup weyl_;
  std::vector<SimpleReflection> simples_;

  mutable std::shared_mutex word_mutex_;
  mutable std::unordered_map<AffineElt, ReducedWord, AffineEltHash> word_cache_;
  mutable std::shared_mutex rep_mutex_;
  mutable std::unordered_map<Weight, AffineElt, WeightHash> rep_cache_;
};

/// Formats x as "w=<word> t=(..)" for diagnostics.
std::string describe(const AffineWeylGroup& g, const AffineElt& x);

}  // namespace hsw
