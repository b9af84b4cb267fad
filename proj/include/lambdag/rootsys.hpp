#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lambdag {

/// Coordinates of a root in the basis of simple roots.
using RootCoords = std::vector<int>;

/// Sorted list of 0-based simple-root indices.
using SimpleSet = std::vector<int>;

/// A reduced irreducible root system of type A..G, with Bourbaki numbering
/// of the simple roots. Immutable after construction.
class RootSystem {
public:
  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// cartan()[i][j] = <beta_i, beta_j^vee> = 2(beta_i, beta_j) / (beta_j, beta_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Symmetric form on simple roots, scaled so short roots have square length 2.
  const std::vector<std::vector<int>>& form() const { return form_; }

  /// Positive roots ordered by height, ties broken by decreasing
  /// lexicographic order, so that the first rank() entries are beta_1..beta_l.
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  bool adjacent(int i, int j) const { return adjacency_[i][j]; }
  const std::vector<std::vector<bool>>& dynkin_adjacency() const { return adjacency_; }

  /// Index of a positive root in positive_roots(), or -1.
  int positive_index(const RootCoords& r) const;
  /// True if r or -r is a positive root.
  bool is_root(const RootCoords& r) const;

  int height(const RootCoords& r) const;
  /// (a, b) with the scaling of form().
  int inner(const RootCoords& a, const RootCoords& b) const;
  /// <a, b^vee> = 2(a, b)/(b, b); b must be a root.
  int pairing(const RootCoords& a, const RootCoords& b) const;

  const RootCoords& highest_root() const { return positive_.back(); }

  friend RootSystem build_root_system(char type_label, int rank);

private:
  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> form_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<RootCoords> positive_;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate_type(char type_label, int rank);

RootSystem build_root_system(char type_label, int rank);

/// Classical value of |R_+| for a valid (type, rank).
long expected_positive_count(char type_label, int rank);

/// Vertices of degree <= 1 in the Dynkin diagram.
SimpleSet extremities(const RootSystem& rs);

/// Maximal Dynkin-connected pieces of X, ordered by least element.
std::vector<SimpleSet> connected_components(const RootSystem& rs, const SimpleSet& X);

/// Indices (into positive_roots()) of positive roots supported on X.
std::vector<int> root_subsystem(const RootSystem& rs, const SimpleSet& X);

/// Pi minus {beta_i}.
SimpleSet complement_of(const RootSystem& rs, int i);

bool is_subset_of_simple(const RootSystem& rs, const SimpleSet& X);

} // namespace lambdag
