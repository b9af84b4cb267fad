#pragma once

#include "lambdag/rational.hpp"
#include "lambdag/rootsys.hpp"

#include <string>
#include <vector>

namespace lambdag {

/// Dense vector of g in the fixed basis of a LieAlgebra.
using GVector = std::vector<Rational>;

/// One nonzero coordinate of a sparse vector of g.
struct GTerm {
  int index;
  Rational coeff;
  bool operator==(const GTerm&) const = default;
};
using SparseG = std::vector<GTerm>;

/// Simple Lie algebra over Q on the basis
///   x_{-alpha} (negative roots, descending height),
///   h_1..h_l (simple coroots H_{beta_i}),
///   x_alpha (positive roots, ascending height),
/// normalised so that kappa(x_alpha, x_{-alpha}) = 1 with kappa the trace form.
/// With n = |R_+|, x_{alpha_j} has index n + l + j and x_{-alpha_j} has
/// index n - 1 - j, so index m and dim - 1 - m carry opposite weights.
class LieAlgebra {
public:
  const RootSystem& root_system() const { return rs_; }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return int(rs_.num_positive()); }

  int pos_index(int root) const { return num_positive() + rank() + root; }
  int neg_index(int root) const { return num_positive() - 1 - root; }
  int cartan_index(int i) const { return num_positive() + i; }
  int opposite(int m) const { return dim_ - 1 - m; }

  bool is_cartan(int m) const { return m >= num_positive() && m < num_positive() + rank(); }
  bool is_positive(int m) const { return m >= num_positive() + rank(); }
  bool is_negative(int m) const { return m < num_positive(); }
  /// Index into positive_roots() of the root of basis element m (root vectors only).
  int root_of(int m) const { return is_positive(m) ? m - num_positive() - rank() : num_positive() - 1 - m; }

  /// Weight of basis element m in simple-root coordinates (zero on the Cartan part).
  const RootCoords& weight(int m) const { return weights_[m]; }

  /// [x_i, x_j] as a sparse vector.
  const SparseG& bracket_basis(int i, int j) const { return brackets_[std::size_t(i) * dim_ + j]; }

  const std::vector<std::vector<Rational>>& killing_matrix() const { return killing_; }
  const Rational& killing_basis(int i, int j) const { return killing_[i][j]; }

  /// Coroot H_alpha of a positive root, as a vector of g supported on the Cartan part.
  const GVector& coroot(int root) const { return coroots_[root]; }

  /// [x_alpha, x_{-alpha}] = t_alpha, the kappa-dual of alpha.
  GVector dual_coroot(int root) const;

  GVector unit(int m) const;
  GVector zero() const { return GVector(dim_); }

  /// kappa_chev(e_alpha, e_{-alpha}) on the integral Chevalley basis, i.e. the
  /// factor x_{-alpha} was divided by.
  const Rational& chevalley_scale(int root) const { return scales_[root]; }

  /// Human-readable basis label, e.g. "x-(0,1)", "h1", "x(1,1)".
  std::string label(int m) const;

  friend LieAlgebra build_algebra(const RootSystem& rs);
  friend LieAlgebra algebra_from_brackets(const RootSystem& rs, std::vector<SparseG> brackets);

private:
  void finish();

  RootSystem rs_;
  int dim_ = 0;
  std::vector<SparseG> brackets_;
  std::vector<std::vector<Rational>> killing_;
  std::vector<GVector> coroots_;
  std::vector<RootCoords> weights_;
  std::vector<Rational> scales_;
};

/// Integer structure constants N_{alpha,beta} of a Chevalley basis, with the
/// extraspecial pairs given sign +.
class ChevalleyConstants {
public:
  explicit ChevalleyConstants(const RootSystem& rs);
  /// Roots are signed: +(r+1) means positive root r, -(r+1) its negative.
  int N(int a, int b) const;
  /// Returns the signed index of a+b, or 0 if it is not a root.
  int sum(int a, int b) const;

private:
  RootCoords coords(int a) const;
  int signed_index(const RootCoords& c) const;
  int norm(int a) const;
  int positive_N(int a, int b) const;

  const RootSystem& rs_;
  int n_;
  std::vector<int> table_; // n x n, positive pairs
  std::vector<int> sums_;  // (2n) x (2n) signed sum index
};

LieAlgebra build_algebra(const RootSystem& rs);

/// Rebuild an algebra from a cached bracket table (checks sizes, recomputes kappa).
LieAlgebra algebra_from_brackets(const RootSystem& rs, std::vector<SparseG> brackets);

GVector bracket(const LieAlgebra& L, const GVector& x, const GVector& y);
Rational killing(const LieAlgebra& L, const GVector& x, const GVector& y);

/// Matrix of ad x_i; column j is [x_i, x_j].
std::vector<std::vector<Rational>> adjoint_matrix(const LieAlgebra& L, int i);

/// trace(ad x ad y) computed from the structure constants alone.
Rational trace_form(const LieAlgebra& L, const GVector& x, const GVector& y);

SparseG to_sparse(const GVector& v);
GVector to_dense(const LieAlgebra& L, const SparseG& v);

} // namespace lambdag
