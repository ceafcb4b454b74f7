#pragma once

#include "hsw/laurent.hpp"
#include "hsw/weight.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsw {

/// Raised for malformed input: unknown preset, invalid datum file,
/// ill-formed weights or words.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A positive root together with its coroot and their expansions in the
/// simple roots / simple coroots.
struct PositiveRoot {
  Weight root;
  Weight coroot;
  std::vector<int> root_coords;
  std::vector<int> coroot_coords;
  int component = 0;
  int height() const;
  int coroot_height() const;
};

/// Root datum (X, Phi, X^vee, Phi^vee) with X = Z^rank and a chosen base.
///
/// Immutable after construction. Construction validates that the pairing
/// matrix is a Cartan matrix of finite type and that X^vee / Z Phi^vee is
/// torsion-free (so that fundamental weights exist in X).
class RootDatum {
 public:
  RootDatum(std::string name, int rank, std::vector<Weight> simple_roots,
            std::vector<Weight> simple_coroots);

  /// "A1", "A2", "B2", "C3", "D4", "G2", "GL3", and products such as
  /// "A1xGL2". Simply-connected types use the fundamental-weight basis of X.
  static RootDatum preset(std::string_view name);
  static RootDatum product(const std::vector<RootDatum>& factors);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  const Weight& simple_coroot(int i) const { return simple_coroots_[static_cast<std::size_t>(i)]; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }

  /// <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const { return static_cast<int>(simple_root(j).dot(simple_coroot(i))); }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  /// +(k+1) if w is the k-th positive root, -(k+1) if it is its negative, 0 otherwise.
  int root_index(const Weight& w) const;

  /// Irreducible components as lists of simple-root indices.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Index into positive_roots() of the root whose coroot is the highest
  /// coroot of the component.
  int highest_coroot_root(int component) const {
    return highest_coroot_[static_cast<std::size_t>(component)];
  }

  /// varpi_i in X with <varpi_i, alpha_j^vee> = delta_ij.
  const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
  const Weight& two_rho() const { return two_rho_; }

  bool is_dominant(const Weight& lambda) const;
  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  Weight reflect(int i, const Weight& lambda) const;
  /// Integer coordinates of beta in the simple roots, if beta lies in Z Phi.
  std::optional<std::vector<long>> root_coordinates(const Weight& beta) const;
  /// Z Phi membership.
  bool in_root_lattice(const Weight& beta) const { return root_coordinates(beta).has_value(); }

  Weight zero() const { return Weight(rank_); }

 private:
  void compute_positive_roots();
  void compute_components();
  void compute_fundamental_weights();

  std::string name_;
  int rank_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> simple_coroots_;
  std::vector<PositiveRoot> positive_roots_;
  std::map<Weight, int> root_lookup_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_simple_;
  std::vector<int> highest_coroot_;
  std::vector<Weight> fundamental_weights_;
  Weight two_rho_;
};

/// Cartan matrix <alpha_j, alpha_i^vee> of a finite type ("A", 3) etc.
std::vector<std::vector<int>> cartan_matrix(char type, int n);

/// Element of the finite Weyl group: its matrix on X and its length.
struct WeylElt {
  std::vector<int> matrix;  // rank x rank, row-major, acting on column vectors
  int length = 0;
};

/// The finite Weyl group of a datum, enumerated as the orbit of the
/// identity under right multiplication by simple reflections.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& datum);

  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElt& element(int w) const { return elements_[static_cast<std::size_t>(w)]; }
  const std::vector<WeylElt>& elements() const { return elements_; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  int length(int w) const { return element(w).length; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * size() + b)]; }
  int inverse(int w) const { return inverse_[static_cast<std::size_t>(w)]; }
  /// Does w send the k-th positive root into -Phi^+?
  bool inverts(int w, int k) const { return (inversions_[static_cast<std::size_t>(w)] >> k) & 1U; }
  Weight apply(int w, const Weight& lambda) const;
  /// Index of the element with the given matrix, or -1.
  int find(const std::vector<int>& matrix) const;
  /// Reduced word in simple-root indices, w = s_{i1} ... s_{ik}.
  std::vector<int> word(int w) const;
  /// (-1)^length.
  int sign(int w) const { return length(w) % 2 == 0 ? 1 : -1; }

 private:
  std::vector<int> matmul(const std::vector<int>& a, const std::vector<int>& b) const;
  Weight apply_matrix(const std::vector<int>& m, const Weight& lambda) const;

  int rank_;
  int semisimple_rank_;
  std::vector<std::vector<int>> reflections_;
  std::vector<WeylElt> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_;
  std::vector<int> mul_;
  std::vector<int> inverse_;
  std::vector<std::uint64_t> inversions_;
  int longest_ = 0;
};

/// The finite Weyl group of d, with lengths cached and w0 identified.
inline WeylGroup weyl_enumerate(const RootDatum& d) { return WeylGroup(d); }

}  // namespace hsw
