#pragma once

#include "lambdag/exterior.hpp"

#include <optional>
#include <vector>

namespace lambdag {

/// A subspace of Lambda^k g, kept in row echelon form under the
/// lexicographic order of monomials. basis() returns the reduced rows.
class Subspace {
public:
  explicit Subspace(int grade = 0) : grade_(grade) {}

  int grade() const { return grade_; }
  std::size_t dim() const { return ech_.size(); }
  bool is_zero() const { return ech_.empty(); }

  /// Adds v to the span; returns true if the dimension grew.
  bool add(const ExteriorVector& v);

  ExteriorVector reduce(const ExteriorVector& v) const;
  bool contains(const ExteriorVector& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Reduced row echelon basis, sorted by pivot.
  std::vector<ExteriorVector> basis() const;
  std::vector<WedgeIndex> pivots() const;

  bool operator==(const Subspace& other) const;

private:
  void canonicalize() const;

  int grade_;
  mutable Echelon<WedgeIndex, WedgeLess> ech_;
  mutable bool canonical_ = true;
};

/// Actors are elements of g given sparsely.
using Actors = std::vector<SparseG>;

Actors basis_actors(const LieAlgebra& L, const std::vector<int>& indices);
Actors all_basis_actors(const LieAlgebra& L);

/// Span of the vectors; throws std::invalid_argument on a grade mismatch.
Subspace row_reduce(int grade, const std::vector<ExteriorVector>& vectors);
Subspace span_monomials(int grade, const std::vector<WedgeIndex>& monomials);
Subspace full_space(const LieAlgebra& L, int k);

/// Span of all u ^ v with u, v running over bases of A and B.
Subspace wedge_span(const Subspace& A, const Subspace& B);
Subspace sum(const Subspace& A, const Subspace& B);
Subspace intersection(const Subspace& A, const Subspace& B);

/// Smallest subspace containing gens and stable under ad x for x in actors.
/// Each new basis vector is pushed through every actor once; stops early
/// when the whole of Lambda^k g is reached.
Subspace closure(const LieAlgebra& L, const Subspace& gens, const Actors& actors);

/// {v : <v, w> = 0 for all w in W}.
Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& W);

/// Largest actor-stable subspace inside W, as perp(closure(perp W)).
Subspace biggest_submodule_in(const LieAlgebra& L, const Subspace& W, const Actors& actors);

/// Same subspace via S <- {v in S : ad x (v) in S for all actors} until stable.
Subspace biggest_submodule_iterative(const LieAlgebra& L, const Subspace& W, const Actors& actors);

/// {w in W : ad x_alpha (w) = 0 for every positive root alpha}.
Subspace u_invariants(const LieAlgebra& L, const Subspace& W);

/// A basis vector w of W and an actor with ad x (w) outside W, if any.
struct StabilityWitness {
  ExteriorVector vector;
  std::size_t actor;
};
std::optional<StabilityWitness> stability_witness(const LieAlgebra& L, const Subspace& W, const Actors& actors);

/// A basis vector of A not contained in B, or of B not contained in A.
std::optional<ExteriorVector> difference_witness(const Subspace& A, const Subspace& B);

} // namespace lambdag
