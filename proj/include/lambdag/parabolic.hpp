#pragma once

#include "lambdag/submodule.hpp"

#include <string>
#include <vector>

namespace lambdag {

/// Constituents of the parabolic subalgebra p_X = b + sum_{alpha in <X>} g^{-alpha}.
/// Index lists refer to the basis of the LieAlgebra.
struct ParabolicData {
  SimpleSet X;
  std::vector<SimpleSet> components;           // X_1..X_n
  std::vector<int> roots_X;                    // <X>, indices into positive_roots()
  std::vector<std::vector<int>> component_roots; // <X_i>
  std::vector<int> p_u;                        // x_alpha, alpha in R_+ \ <X>
  std::vector<int> p_minus_u;                  // their negatives
  std::vector<std::vector<int>> d_parts;       // d_i: x_{+-alpha}, alpha in <X_i>, and h_j, j in X_i
  std::vector<GVector> z;                      // basis of the annihilator of X in h
  std::vector<int> n;                          // n_i = |<X_i>|
  int d = 0;                                   // dim p_u
  int n_prime = 0;                             // sum n_i

  int n_components() const { return int(components.size()); }
  int dim_d() const;
  /// l = z + d_1 + ... + d_n as a list of g-vectors.
  std::vector<GVector> l_basis(const LieAlgebra& L) const;
  /// d_X = d_1 + ... + d_n.
  std::vector<int> d_indices() const;
  /// E_X = p_{-,u} + z + p_u.
  std::vector<GVector> E_basis(const LieAlgebra& L) const;
  /// p_- = l + p_{-,u}.
  std::vector<GVector> p_minus_basis(const LieAlgebra& L) const;
};

ParabolicData build_parabolic(const LieAlgebra& L, const SimpleSet& X);

std::vector<GVector> units(const LieAlgebra& L, const std::vector<int>& indices);

/// Exterior power Lambda^j of span(vs), spanned by wedges of j-subsets.
std::vector<ExteriorVector> exterior_power_spanning(const std::vector<GVector>& vs, int j);
Subspace exterior_power(const std::vector<GVector>& vs, int j);

/// An ordered direct sum decomposition g = V_1 + ... + V_m together with
/// the involution i -> i* on part positions: i*_p = i_{star[p]}.
struct GradedDecomposition {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<GVector>> parts;
  std::vector<int> star;

  std::vector<int> star_of(const std::vector<int>& i) const;
};

/// (l, p_u, p_{-,u}) with i* = (i_1, i_3, i_2).
GradedDecomposition decomposition_n3(const LieAlgebra& L, const ParabolicData& pd);
/// (z, d_1, ..., d_n, p_{-,u}, p_u), the last two exchanged by *.
GradedDecomposition decomposition_n5(const LieAlgebra& L, const ParabolicData& pd);

/// Root data attached to beta with X = Pi \ {beta}.
struct BetaData {
  int beta = 0;              // simple-root index
  std::vector<int> Z;        // alpha in <X> with beta + alpha a root
  std::vector<int> Zprime;   // <X> \ Z
  std::vector<int> Y;        // R_+ \ (<X> u {beta})
  std::vector<GVector> h_beta; // kappa-orthogonal complement of H_beta in h
};

BetaData beta_data(const LieAlgebra& L, int beta);

/// (E_-, g^{-beta}, u_{0,-}, u_{0,0}, k H_beta, h_beta, u_0, u_{0,+}, g^beta, E).
/// Requires rank >= 2.
GradedDecomposition decomposition_n10(const LieAlgebra& L, int beta);

/// Multi-indices of total degree k with i_p <= dim of part p, lexicographic.
std::vector<std::vector<int>> multi_indices(const GradedDecomposition& dec, int k);

struct GradedPiece {
  std::vector<int> multi_index;
  Subspace space;
};

Subspace piece_space(const GradedDecomposition& dec, const std::vector<int>& i);
std::vector<GradedPiece> graded_pieces(const GradedDecomposition& dec, int k);

/// omega'_alpha = H_beta ^ [x_beta, x_alpha] + 2 x_beta ^ x_alpha,
/// omega_alpha  = H_beta ^ [x_-beta, x_-alpha] + c_alpha x_-beta ^ x_-alpha,
/// c_alpha = -1/2 kappa(H_beta, H_beta) kappa([x_beta, x_alpha], [x_-beta, x_-alpha]).
struct OmegaForms {
  ExteriorVector omega_prime;
  ExteriorVector omega;
  Rational c;
};

/// Throws std::invalid_argument unless alpha (a positive-root index) lies in Z.
OmegaForms omega_forms(const LieAlgebra& L, int beta, int alpha);

/// Tuples (j_1..j_n) with j_i <= n_i and sum k.
std::vector<std::vector<int>> index_set_I(const ParabolicData& pd, int k);

/// Spanning vectors of V'_{k,p}; an empty list when no tuple qualifies.
std::vector<ExteriorVector> spanning_V_prime(const LieAlgebra& L, const ParabolicData& pd, int k);
/// Spanning vectors of V_{k,p} = sum_i Lambda^i E ^ V'_{k-i,p}.
std::vector<ExteriorVector> spanning_V(const LieAlgebra& L, const ParabolicData& pd, int k);

Subspace span_V_prime(const LieAlgebra& L, const ParabolicData& pd, int k);
Subspace span_V(const LieAlgebra& L, const ParabolicData& pd, int k);

/// Closed forms for X = Pi \ {beta_{s+1}}, classical types, as printed and as
/// recomputed from n_1, n_2, d. Values of the form n - 2d - n_j.
struct AppendixRecord {
  char type = 'A';
  int rank = 0;
  int s = 0;
  long n = 0;
  long n1 = 0;
  long n2 = 0;            // statement form
  long n2_derivation = 0; // form used in the derivation (differs for D)
  long d = 0;
  Rational gap1;          // n - 2d - n1 from the closed forms
  Rational gap1_printed;
  Rational gap2;          // n - 2d - n2
  Rational gap2_printed;
  /// s <= (a - sqrt(disc)) / den, the bound implied by gap1 >= 0.
  long bound_a = 0, bound_disc = 0, bound_den = 1;
  /// The bound exactly as printed in the statement.
  long printed_a = 0, printed_disc = 0, printed_den = 1;
  int threshold = 0; // least rank where 2d + n1 <= n can hold
};

/// Valid s: 1..l-2 for A, B, C; 1..l-4 for D. Throws std::invalid_argument otherwise.
AppendixRecord appendix_formulas(char type_label, int rank, int s);

/// s <= (a - sqrt(disc)) / den, decided exactly.
bool satisfies_sqrt_bound(long s, long a, long disc, long den);

} // namespace lambdag
