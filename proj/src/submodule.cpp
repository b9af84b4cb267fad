#include "lambdag/submodule.hpp"

#include <stdexcept>
#include <unordered_map>

namespace lambdag {

namespace {

ExteriorVector as_vector(int grade, SparseRow<WedgeIndex> terms) {
  ExteriorVector v;
  v.grade = grade;
  v.terms = std::move(terms);
  return v;
}

SparseRow<KernelKey> tag(std::uint32_t block, const ExteriorVector& v) {
  SparseRow<KernelKey> out;
  out.reserve(v.terms.size());
  for (const auto& [w, c] : v.terms) out.emplace_back(KernelKey{block, w}, c);
  return out;
}

ExteriorVector combine(int grade, const std::vector<ExteriorVector>& basis, const Combination& c) {
  std::vector<std::pair<WedgeIndex, Rational>> terms;
  for (const auto& [i, coeff] : c)
    for (const auto& [w, v] : basis[i].terms) terms.emplace_back(w, coeff * v);
  return make_vector(grade, std::move(terms));
}

void check_grade(const Subspace& S, const ExteriorVector& v) {
  if (v.grade != S.grade())
    throw std::invalid_argument("grade " + std::to_string(v.grade) + " vector used with a grade " +
                                std::to_string(S.grade()) + " subspace");
}

} // namespace

bool Subspace::add(const ExteriorVector& v) {
  check_grade(*this, v);
  if (v.is_zero()) return false;
  if (ech_.insert(v.terms)) {
    canonical_ = false;
    return true;
  }
  return false;
}

ExteriorVector Subspace::reduce(const ExteriorVector& v) const {
  check_grade(*this, v);
  return as_vector(grade_, ech_.reduce(v.terms));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.grade_ != grade_) return other.is_zero();
  for (const auto& r : other.ech_.rows())
    if (!ech_.contains(r)) return false;
  return true;
}

void Subspace::canonicalize() const {
  if (canonical_) return;
  ech_.canonicalize();
  canonical_ = true;
}

std::vector<ExteriorVector> Subspace::basis() const {
  canonicalize();
  std::vector<ExteriorVector> out;
  out.reserve(ech_.size());
  for (const auto& r : ech_.rows()) out.push_back(as_vector(grade_, r));
  return out;
}

std::vector<WedgeIndex> Subspace::pivots() const {
  canonicalize();
  std::vector<WedgeIndex> out;
  for (const auto& r : ech_.rows()) out.push_back(r[0].first);
  return out;
}

bool Subspace::operator==(const Subspace& other) const {
  if (dim() != other.dim()) return false;
  if (dim() == 0) return true;
  if (grade_ != other.grade_) return false;
  canonicalize();
  other.canonicalize();
  return ech_.rows() == other.ech_.rows();
}

Actors basis_actors(const LieAlgebra& L, const std::vector<int>& indices) {
  Actors out;
  for (int i : indices) {
    if (i < 0 || i >= L.dim()) throw std::invalid_argument("actor index out of range");
    out.push_back({GTerm{i, Rational(1)}});
  }
  return out;
}

Actors all_basis_actors(const LieAlgebra& L) {
  std::vector<int> idx(L.dim());
  for (int i = 0; i < L.dim(); ++i) idx[i] = i;
  return basis_actors(L, idx);
}

Subspace row_reduce(int grade, const std::vector<ExteriorVector>& vectors) {
  Subspace S(grade);
  for (const auto& v : vectors) S.add(v);
  return S;
}

Subspace span_monomials(int grade, const std::vector<WedgeIndex>& monomials) {
  Subspace S(grade);
  for (WedgeIndex w : monomials) {
    if (grade_of(w) != grade) throw std::invalid_argument("monomial grade mismatch");
    S.add(as_vector(grade, {{w, Rational(1)}}));
  }
  return S;
}

Subspace full_space(const LieAlgebra& L, int k) {
  require_mask_width(L);
  return span_monomials(k, all_wedges(L.dim(), k));
}

Subspace wedge_span(const Subspace& A, const Subspace& B) {
  Subspace S(A.grade() + B.grade());
  const auto bb = B.basis();
  for (const auto& a : A.basis())
    for (const auto& b : bb) S.add(wedge(a, b));
  return S;
}

Subspace sum(const Subspace& A, const Subspace& B) {
  if (A.grade() != B.grade()) throw std::invalid_argument("sum of subspaces of different grades");
  Subspace S = A;
  for (const auto& b : B.basis()) S.add(b);
  return S;
}

Subspace intersection(const Subspace& A, const Subspace& B) {
  if (A.grade() != B.grade()) throw std::invalid_argument("intersection of subspaces of different grades");
  const auto basis = A.basis();
  std::vector<SparseRow<KernelKey>> images;
  images.reserve(basis.size());
  for (const auto& a : basis) images.push_back(tag(0, B.reduce(a)));
  Subspace S(A.grade());
  for (const auto& c : kernel_of<WedgeLess>(images)) S.add(combine(A.grade(), basis, c));
  return S;
}

Subspace closure(const LieAlgebra& L, const Subspace& gens, const Actors& actors) {
  require_mask_width(L);
  const int k = gens.grade();
  const std::uint64_t top = binomial(L.dim(), k);
  Subspace S(k);
  std::vector<ExteriorVector> queue;
  for (const auto& g : gens.basis())
    if (S.add(g)) queue.push_back(g);
  for (std::size_t next = 0; next < queue.size() && S.dim() < top; ++next) {
    const ExteriorVector v = queue[next];
    for (const auto& x : actors) {
      ExteriorVector r = S.reduce(ad_action(L, x, v));
      if (r.is_zero()) continue;
      S.add(r);
      queue.push_back(std::move(r));
      if (S.dim() == top) break;
    }
  }
  return S;
}

Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& W) {
  require_mask_width(L);
  const int k = W.grade();
  Subspace F(k);
  for (const auto& w : W.basis()) F.add(gram_functional(L, w));
  // Kernel of the functionals: one vector per non-pivot monomial J,
  // e_J - sum_r F[r][J] e_{pivot r}.
  const auto rows = F.basis();
  std::unordered_map<WedgeIndex, std::size_t> pivot_row;
  for (std::size_t r = 0; r < rows.size(); ++r) pivot_row.emplace(rows[r].terms[0].first, r);
  std::unordered_map<WedgeIndex, std::vector<std::pair<WedgeIndex, Rational>>> extra;
  for (const auto& row : rows)
    for (std::size_t t = 1; t < row.terms.size(); ++t)
      extra[row.terms[t].first].emplace_back(row.terms[0].first, -row.terms[t].second);
  Subspace out(k);
  for (WedgeIndex J : all_wedges(L.dim(), k)) {
    if (pivot_row.count(J)) continue;
    std::vector<std::pair<WedgeIndex, Rational>> terms{{J, Rational(1)}};
    if (auto it = extra.find(J); it != extra.end())
      terms.insert(terms.end(), it->second.begin(), it->second.end());
    out.add(make_vector(k, std::move(terms)));
  }
  return out;
}

Subspace biggest_submodule_in(const LieAlgebra& L, const Subspace& W, const Actors& actors) {
  return orthogonal_complement(L, closure(L, orthogonal_complement(L, W), actors));
}

Subspace biggest_submodule_iterative(const LieAlgebra& L, const Subspace& W, const Actors& actors) {
  Subspace S = W;
  while (true) {
    const auto basis = S.basis();
    std::vector<SparseRow<KernelKey>> images(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t a = 0; a < actors.size(); ++a) {
        auto part = tag(std::uint32_t(a), S.reduce(ad_action(L, actors[a], basis[i])));
        images[i].insert(images[i].end(), part.begin(), part.end());
      }
    Subspace next(W.grade());
    for (const auto& c : kernel_of<WedgeLess>(images)) next.add(combine(W.grade(), basis, c));
    if (next.dim() == S.dim()) return next;
    S = std::move(next);
  }
}

Subspace u_invariants(const LieAlgebra& L, const Subspace& W) {
  const auto basis = W.basis();
  std::vector<SparseRow<KernelKey>> images(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int a = 0; a < L.num_positive(); ++a) {
      auto part = tag(std::uint32_t(a), ad_basis(L, L.pos_index(a), basis[i]));
      images[i].insert(images[i].end(), part.begin(), part.end());
    }
  Subspace out(W.grade());
  for (const auto& c : kernel_of<WedgeLess>(images)) out.add(combine(W.grade(), basis, c));
  return out;
}

std::optional<StabilityWitness> stability_witness(const LieAlgebra& L, const Subspace& W, const Actors& actors) {
  for (const auto& w : W.basis())
    for (std::size_t a = 0; a < actors.size(); ++a)
      if (!W.contains(ad_action(L, actors[a], w))) return StabilityWitness{w, a};
  return std::nullopt;
}

std::optional<ExteriorVector> difference_witness(const Subspace& A, const Subspace& B) {
  for (const auto& a : A.basis())
    if (!B.contains(a)) return a;
  for (const auto& b : B.basis())
    if (!A.contains(b)) return b;
  return std::nullopt;
}

} // namespace lambdag
