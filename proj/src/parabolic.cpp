#include "lambdag/parabolic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lambdag {

namespace {

struct IntLess {
  bool operator()(std::uint64_t a, std::uint64_t b) const { return a < b; }
};

// Rational kernel of the linear map c -> (sum_j c_j m[r][j])_r, j < ncols.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& m, int ncols) {
  std::vector<SparseRow<KernelKey>> images(ncols);
  for (int j = 0; j < ncols; ++j)
    for (std::size_t r = 0; r < m.size(); ++r)
      if (sgn(m[r][j]) != 0) images[j].emplace_back(KernelKey{0, r}, m[r][j]);
  std::vector<std::vector<Rational>> out;
  for (const auto& c : kernel_of<IntLess>(images)) {
    std::vector<Rational> v(ncols);
    for (const auto& [j, x] : c) v[j] = x;
    out.push_back(std::move(v));
  }
  return out;
}

GVector cartan_vector(const LieAlgebra& L, const std::vector<Rational>& coeffs) {
  GVector v = L.zero();
  for (int j = 0; j < L.rank(); ++j) v[L.cartan_index(j)] = coeffs[j];
  return v;
}

std::vector<ExteriorVector> wedge_all(const std::vector<ExteriorVector>& a, const std::vector<ExteriorVector>& b) {
  std::vector<ExteriorVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      ExteriorVector w = wedge(x, y);
      if (!w.is_zero()) out.push_back(std::move(w));
    }
  return out;
}

void enumerate_bounded(const std::vector<int>& caps, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(caps.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t p, int left) {
    if (p == caps.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    int rest = 0;
    for (std::size_t q = p + 1; q < caps.size(); ++q) rest += caps[q];
    for (int v = std::min(left, caps[p]); v >= 0; --v) {
      if (left - v > rest) break;
      cur[p] = v;
      rec(p + 1, left - v);
    }
    cur[p] = 0;
  };
  rec(0, k);
  std::sort(out.begin(), out.end());
}

} // namespace

std::vector<GVector> units(const LieAlgebra& L, const std::vector<int>& indices) {
  std::vector<GVector> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(L.unit(i));
  return out;
}

int ParabolicData::dim_d() const {
  int s = 0;
  for (const auto& p : d_parts) s += int(p.size());
  return s;
}

std::vector<int> ParabolicData::d_indices() const {
  std::vector<int> out;
  for (const auto& p : d_parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GVector> ParabolicData::l_basis(const LieAlgebra& L) const {
  std::vector<GVector> out = z;
  for (const auto& v : units(L, d_indices())) out.push_back(v);
  return out;
}

std::vector<GVector> ParabolicData::E_basis(const LieAlgebra& L) const {
  std::vector<GVector> out = units(L, p_minus_u);
  out.insert(out.end(), z.begin(), z.end());
  for (const auto& v : units(L, p_u)) out.push_back(v);
  return out;
}

std::vector<GVector> ParabolicData::p_minus_basis(const LieAlgebra& L) const {
  std::vector<GVector> out = l_basis(L);
  for (const auto& v : units(L, p_minus_u)) out.push_back(v);
  return out;
}

ParabolicData build_parabolic(const LieAlgebra& L, const SimpleSet& Xin) {
  const RootSystem& rs = L.root_system();
  if (!is_subset_of_simple(rs, Xin)) throw std::invalid_argument("X is not a subset of the simple roots");
  ParabolicData pd;
  pd.X = Xin;
  std::sort(pd.X.begin(), pd.X.end());
  pd.X.erase(std::unique(pd.X.begin(), pd.X.end()), pd.X.end());
  pd.components = connected_components(rs, pd.X);
  pd.roots_X = root_subsystem(rs, pd.X);
  std::vector<bool> in_X(rs.num_positive(), false);
  for (int r : pd.roots_X) in_X[r] = true;
  for (int r = 0; r < int(rs.num_positive()); ++r)
    if (!in_X[r]) {
      pd.p_u.push_back(L.pos_index(r));
      pd.p_minus_u.push_back(L.neg_index(r));
    }
  std::sort(pd.p_minus_u.begin(), pd.p_minus_u.end());
  for (const auto& Xi : pd.components) {
    auto roots = root_subsystem(rs, Xi);
    std::vector<int> part;
    for (int r : roots) {
      part.push_back(L.pos_index(r));
      part.push_back(L.neg_index(r));
    }
    for (int j : Xi) part.push_back(L.cartan_index(j));
    std::sort(part.begin(), part.end());
    pd.n.push_back(int(roots.size()));
    pd.n_prime += int(roots.size());
    pd.component_roots.push_back(std::move(roots));
    pd.d_parts.push_back(std::move(part));
  }
  std::vector<std::vector<Rational>> constraints;
  for (int i : pd.X) {
    std::vector<Rational> row(L.rank());
    for (int j = 0; j < L.rank(); ++j) row[j] = rs.cartan()[i][j]; // beta_i(h_j)
    constraints.push_back(std::move(row));
  }
  for (const auto& c : nullspace(constraints, L.rank())) pd.z.push_back(cartan_vector(L, c));
  pd.d = int(pd.p_u.size());
  return pd;
}

std::vector<ExteriorVector> exterior_power_spanning(const std::vector<GVector>& vs, int j) {
  std::vector<ExteriorVector> out;
  if (j < 0 || j > int(vs.size())) return out;
  if (j == 0) return {scalar_one()};
  std::vector<ExteriorVector> ones;
  for (const auto& v : vs) ones.push_back(from_g(v));
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  const int m = int(vs.size());
  while (true) {
    ExteriorVector w = ones[idx[0]];
    for (int t = 1; t < j; ++t) w = wedge(w, ones[idx[t]]);
    if (!w.is_zero()) out.push_back(std::move(w));
    int p = j - 1;
    while (p >= 0 && idx[p] == m - j + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

Subspace exterior_power(const std::vector<GVector>& vs, int j) {
  return row_reduce(j, exterior_power_spanning(vs, j));
}

std::vector<int> GradedDecomposition::star_of(const std::vector<int>& i) const {
  std::vector<int> out(i.size());
  for (std::size_t p = 0; p < i.size(); ++p) out[p] = i[star[p]];
  return out;
}

GradedDecomposition decomposition_n3(const LieAlgebra& L, const ParabolicData& pd) {
  GradedDecomposition dec;
  dec.name = "n3";
  dec.labels = {"l", "p_u", "p_-u"};
  dec.parts = {pd.l_basis(L), units(L, pd.p_u), units(L, pd.p_minus_u)};
  dec.star = {0, 2, 1};
  return dec;
}

GradedDecomposition decomposition_n5(const LieAlgebra& L, const ParabolicData& pd) {
  GradedDecomposition dec;
  dec.name = "n5";
  dec.labels.push_back("z");
  dec.parts.push_back(pd.z);
  dec.star.push_back(0);
  for (std::size_t i = 0; i < pd.d_parts.size(); ++i) {
    dec.labels.push_back("d" + std::to_string(i + 1));
    dec.parts.push_back(units(L, pd.d_parts[i]));
    dec.star.push_back(int(i + 1));
  }
  const int m = int(dec.parts.size());
  dec.labels.push_back("p_-u");
  dec.parts.push_back(units(L, pd.p_minus_u));
  dec.labels.push_back("p_u");
  dec.parts.push_back(units(L, pd.p_u));
  dec.star.push_back(m + 1);
  dec.star.push_back(m);
  return dec;
}

BetaData beta_data(const LieAlgebra& L, int beta) {
  const RootSystem& rs = L.root_system();
  if (beta < 0 || beta >= rs.rank()) throw std::invalid_argument("beta must be a simple-root index");
  BetaData bd;
  bd.beta = beta;
  const SimpleSet X = complement_of(rs, beta);
  const auto rx = root_subsystem(rs, X);
  std::vector<bool> in_X(rs.num_positive(), false);
  for (int r : rx) in_X[r] = true;
  const RootCoords& b = rs.positive_roots()[beta];
  for (int r : rx) {
    RootCoords s = rs.positive_roots()[r];
    for (int i = 0; i < rs.rank(); ++i) s[i] += b[i];
    (rs.is_root(s) ? bd.Z : bd.Zprime).push_back(r);
  }
  for (int r = 0; r < int(rs.num_positive()); ++r)
    if (!in_X[r] && r != beta) bd.Y.push_back(r);
  std::vector<Rational> row(L.rank());
  const GVector& Hb = L.coroot(beta);
  for (int j = 0; j < L.rank(); ++j) row[j] = killing(L, L.unit(L.cartan_index(j)), Hb);
  for (const auto& c : nullspace({row}, L.rank())) bd.h_beta.push_back(cartan_vector(L, c));
  return bd;
}

GradedDecomposition decomposition_n10(const LieAlgebra& L, int beta) {
  if (L.rank() < 2) throw std::invalid_argument("the ten-part decomposition needs rank >= 2");
  const BetaData bd = beta_data(L, beta);
  auto pos = [&](const std::vector<int>& roots) {
    std::vector<int> idx;
    for (int r : roots) idx.push_back(L.pos_index(r));
    return units(L, idx);
  };
  auto neg = [&](const std::vector<int>& roots) {
    std::vector<int> idx;
    for (int r : roots) idx.push_back(L.neg_index(r));
    return units(L, idx);
  };
  GradedDecomposition dec;
  dec.name = "n10";
  dec.labels = {"E_-", "g^-beta", "u_0,-", "u_0,0", "kH_beta", "h_beta", "u_0", "u_0,+", "g^beta", "E"};
  dec.parts = {neg(bd.Y),    neg({beta}), neg(bd.Zprime), neg(bd.Z),   {L.coroot(beta)},
               bd.h_beta,    pos(bd.Z),   pos(bd.Zprime), pos({beta}), pos(bd.Y)};
  dec.star = {9, 8, 7, 6, 4, 5, 3, 2, 1, 0};
  return dec;
}

std::vector<std::vector<int>> multi_indices(const GradedDecomposition& dec, int k) {
  std::vector<int> caps;
  for (const auto& p : dec.parts) caps.push_back(int(p.size()));
  std::vector<std::vector<int>> out;
  enumerate_bounded(caps, k, out);
  return out;
}

Subspace piece_space(const GradedDecomposition& dec, const std::vector<int>& i) {
  int k = 0;
  for (int v : i) k += v;
  std::vector<ExteriorVector> acc{scalar_one()};
  for (std::size_t p = 0; p < dec.parts.size(); ++p) {
    if (i[p] == 0) continue;
    acc = wedge_all(acc, exterior_power_spanning(dec.parts[p], i[p]));
  }
  return row_reduce(k, acc);
}

std::vector<GradedPiece> graded_pieces(const GradedDecomposition& dec, int k) {
  std::vector<GradedPiece> out;
  for (auto& i : multi_indices(dec, k)) {
    Subspace s = piece_space(dec, i);
    out.push_back({std::move(i), std::move(s)});
  }
  return out;
}

OmegaForms omega_forms(const LieAlgebra& L, int beta, int alpha) {
  const BetaData bd = beta_data(L, beta);
  if (std::find(bd.Z.begin(), bd.Z.end(), alpha) == bd.Z.end())
    throw std::invalid_argument("alpha is not in Z for this beta");
  const GVector xb = L.unit(L.pos_index(beta)), xa = L.unit(L.pos_index(alpha));
  const GVector xmb = L.unit(L.neg_index(beta)), xma = L.unit(L.neg_index(alpha));
  const GVector& Hb = L.coroot(beta);
  const GVector up = bracket(L, xb, xa), down = bracket(L, xmb, xma);
  OmegaForms f;
  f.c = frac(-1, 2) * killing(L, Hb, Hb) * killing(L, up, down);
  f.omega_prime = wedge(from_g(Hb), from_g(up)) + Rational(2) * wedge(from_g(xb), from_g(xa));
  f.omega = wedge(from_g(Hb), from_g(down)) + f.c * wedge(from_g(xmb), from_g(xma));
  return f;
}

std::vector<std::vector<int>> index_set_I(const ParabolicData& pd, int k) {
  std::vector<std::vector<int>> out;
  enumerate_bounded(pd.n, k, out);
  return out;
}

std::vector<ExteriorVector> spanning_V_prime(const LieAlgebra& L, const ParabolicData& pd, int k) {
  std::vector<ExteriorVector> out;
  for (const auto& j : index_set_I(pd, k)) {
    std::vector<ExteriorVector> acc{scalar_one()};
    for (std::size_t p = 0; p < j.size(); ++p)
      if (j[p] > 0) acc = wedge_all(acc, exterior_power_spanning(units(L, pd.d_parts[p]), j[p]));
    out.insert(out.end(), acc.begin(), acc.end());
  }
  return out;
}

std::vector<ExteriorVector> spanning_V(const LieAlgebra& L, const ParabolicData& pd, int k) {
  const auto E = pd.E_basis(L);
  std::vector<ExteriorVector> out;
  for (int i = 0; i <= k && i <= int(E.size()); ++i) {
    auto vp = spanning_V_prime(L, pd, k - i);
    if (vp.empty()) continue;
    auto part = wedge_all(exterior_power_spanning(E, i), vp);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Subspace span_V_prime(const LieAlgebra& L, const ParabolicData& pd, int k) {
  return row_reduce(k, spanning_V_prime(L, pd, k));
}

Subspace span_V(const LieAlgebra& L, const ParabolicData& pd, int k) { return row_reduce(k, spanning_V(L, pd, k)); }

} // namespace lambdag
