#pragma once

#include "lambdag/chevalley.hpp"
#include "lambdag/echelon.hpp"

#include <cstdint>
#include <vector>

namespace lambdag {

/// Basis monomial x_{i_1} ^ ... ^ x_{i_k} of Lambda^k g with i_1 < ... < i_k,
/// stored as a bit mask (requires dim g <= 64).
using WedgeIndex = std::uint64_t;

/// Lexicographic order on increasing index tuples of equal length.
inline bool wedge_less(WedgeIndex a, WedgeIndex b) {
  if (a == b) return false;
  const WedgeIndex low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) != 0;
}

struct WedgeLess {
  bool operator()(WedgeIndex a, WedgeIndex b) const { return wedge_less(a, b); }
};

inline int grade_of(WedgeIndex w) { return __builtin_popcountll(w); }

std::vector<int> wedge_indices(WedgeIndex w);
/// Throws std::invalid_argument unless indices are strictly increasing in [0, 64).
WedgeIndex make_wedge(const std::vector<int>& increasing);

std::uint64_t binomial(int n, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<WedgeIndex> all_wedges(int n, int k);

/// Homogeneous element of Lambda^grade g.
struct ExteriorVector {
  int grade = 0;
  SparseRow<WedgeIndex> terms; // sorted by WedgeLess, nonzero coefficients

  bool is_zero() const { return terms.empty(); }
  Rational coefficient(WedgeIndex w) const;
  bool operator==(const ExteriorVector& o) const { return grade == o.grade && terms == o.terms; }
};

/// Builds a normalized vector from arbitrary (possibly repeated) terms.
ExteriorVector make_vector(int grade, std::vector<std::pair<WedgeIndex, Rational>> terms);

/// The unit of Lambda^0 g.
ExteriorVector scalar_one();

/// x_{i_1} ^ ... ^ x_{i_k} for indices in any order: permutation sign applied,
/// zero on a repeated index.
ExteriorVector monomial(const std::vector<int>& indices, const Rational& coeff = Rational(1));

/// Grade-1 vector from an element of g.
ExteriorVector from_g(const GVector& x);

ExteriorVector operator+(const ExteriorVector& a, const ExteriorVector& b);
ExteriorVector operator-(const ExteriorVector& a, const ExteriorVector& b);
ExteriorVector operator*(const Rational& c, const ExteriorVector& a);

/// Sign of moving every index of v past the ones of u: (-1)^{#{(i,j): i in u, j in v, i > j}}.
int merge_sign(WedgeIndex u, WedgeIndex v);

ExteriorVector wedge(const ExteriorVector& u, const ExteriorVector& v);

/// Derivation extension of ad x_a, for a basis index a.
ExteriorVector ad_basis(const LieAlgebra& L, int a, const ExteriorVector& w);
/// Derivation extension of ad x for a general x in g.
ExteriorVector ad_action(const LieAlgebra& L, const GVector& x, const ExteriorVector& w);
ExteriorVector ad_action(const LieAlgebra& L, const SparseG& x, const ExteriorVector& w);

/// <e_I, e_J> = det(kappa(x_{I_s}, x_{J_t})). Zero unless J is a partner of I.
Rational gram_basis(const LieAlgebra& L, WedgeIndex I, WedgeIndex J);

/// Monomials J with possibly nonzero <e_I, e_J>: root part mirrored, Cartan
/// part any subset of the same size.
std::vector<WedgeIndex> partners(const LieAlgebra& L, WedgeIndex I);

/// The functional <w, .> as a sparse vector over monomials.
ExteriorVector gram_functional(const LieAlgebra& L, const ExteriorVector& w);

/// Killing form extended to Lambda^k g; throws on grade mismatch.
Rational gram(const LieAlgebra& L, const ExteriorVector& a, const ExteriorVector& b);

/// sum_J a_J b_J for two vectors of the same grade.
Rational dot(const ExteriorVector& a, const ExteriorVector& b);

/// Throws std::invalid_argument when dim g exceeds the 64-bit mask width.
void require_mask_width(const LieAlgebra& L);

} // namespace lambdag
