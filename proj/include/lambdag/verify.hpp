#pragma once

#include "lambdag/parabolic.hpp"
#include "lambdag/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdag {

struct VerifyLimits {
  /// Largest C(dim g, k) handled by exterior-power checks; bigger cases are skipped.
  std::uint64_t max_ambient = 10000;
  /// Exterior-power checks are refused above this rank.
  int max_exterior_rank = 3;
};

constexpr std::uint64_t kDefaultAmbient = 10000;
constexpr std::uint64_t kDeepAmbient = 400000;

/// Thrown for parameters outside the supported range (CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// closure(V_{k,p}, g) == Lambda^k g.
CaseReport verify_theorem(const LieAlgebra& L, const SimpleSet& X, int k, const VerifyLimits& lim = {});

/// Pairwise orthogonality of graded pieces except for (i, i*), and the
/// complement identity for every piece. grading is "n3", "n5" or "n10";
/// "n10" requires |X| = rank - 1.
CaseReport verify_orthogonality(const LieAlgebra& L, const SimpleSet& X, int k, const std::string& grading,
                                const VerifyLimits& lim = {});

/// (Lambda^k p_{-,u})^perp == p_- ^ Lambda^{k-1} g and
/// (Lambda^k p_{+-,u})^perp == l ^ Lambda^{k-1} g.
CaseReport verify_c2oc2(const LieAlgebra& L, const SimpleSet& X, int k, const VerifyLimits& lim = {});

/// For X = Pi \ {beta}, three records: "cau1" (V_{k,u} is g-stable, its perp
/// is the biggest submodule in p_- ^ Lambda^{k-1} g for p_u and for g),
/// "lau1" (that submodule is generated by the u-invariants) and "cau2" (the
/// four containments in V_{k,u}, every one checked).
std::vector<CaseReport> verify_invariant_subspaces(const LieAlgebra& L, int beta, int k, const VerifyLimits& lim = {});

/// Both halves of the p_u / p_{-,u} containment for several stable M, N and
/// every i = 0..k-1.
CaseReport verify_pau2(const LieAlgebra& L, int beta, int k, const VerifyLimits& lim = {});

/// closure(V ^ W', a) == closure(V, a) ^ W' for an a-stable W'.
struct WedgeInstance {
  std::string name;
  Subspace V;
  Subspace W;
  Actors actors;
};
CaseReport verify_wedge_lemma(const LieAlgebra& L, const WedgeInstance& inst);
std::vector<WedgeInstance> wedge_lemma_instances(const LieAlgebra& L);

/// Closed forms and rank thresholds for the classical letters in types, and
/// the dimension tables for the exceptional ones. Classical ranks run up to
/// max_rank; exceptional types use their own ranks.
std::vector<CaseReport> verify_appendix(const std::string& types, int max_rank);

/// Antisymmetry, Jacobi, invariance and normalization on all basis tuples.
/// Returns a description of the first violation.
std::optional<std::string> algebra_axiom_violation(const LieAlgebra& L);

/// Rank of the Gram matrix of Lambda^k g in the monomial basis.
std::size_t gram_rank(const LieAlgebra& L, int k);

struct SuiteOptions {
  bool deep = false;
  int jobs = 1;
};

/// Default grid, plus the rank-3 B/C cases when deep is set.
std::vector<CaseReport> run_suite(const SuiteOptions& opt);
Json suite_config(const SuiteOptions& opt);

using Task = std::function<std::vector<CaseReport>()>;

/// Wraps a single-record check.
template <class F>
Task one(F f) {
  return [f] { return std::vector<CaseReport>{f()}; };
}

/// Runs tasks on up to jobs threads; output is the concatenation in task order.
std::vector<CaseReport> run_jobs(const std::vector<Task>& tasks, int jobs);

/// Nonempty subsets of Pi in increasing size, then lexicographically.
std::vector<SimpleSet> nonempty_subsets(int rank);

/// Algebra for (type, rank), shared per process and read through the cache.
const LieAlgebra& algebra_for(char type_label, int rank);

} // namespace lambdag
