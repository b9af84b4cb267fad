#include "lambdag/chevalley.hpp"

#include <stdexcept>

namespace lambdag {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Chevalley structure constants

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs)
    : rs_(rs), n_(int(rs.num_positive())) {
  const int n = n_;
  sums_.assign(std::size_t(4) * n * n, 0);
  auto slot = [n](int a) { return a > 0 ? a - 1 : n - a - 1; };
  for (int a = -n; a <= n; ++a) {
    if (a == 0) continue;
    for (int b = -n; b <= n; ++b) {
      if (b == 0) continue;
      RootCoords ca = coords(a), cb = coords(b);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
      sums_[std::size_t(slot(a)) * 2 * n + slot(b)] = signed_index(ca);
    }
  }

  table_.assign(std::size_t(n) * n, 0);
  const auto& pos = rs.positive_roots();
  for (int xi = rs.rank(); xi < n; ++xi) {
    const int sx = xi + 1;
    // Extraspecial pair: least gamma with xi - gamma positive; gamma is simple
    // because roots are ordered by height.
    int gamma = 0, delta = 0;
    for (int g = 1; g <= n && !gamma; ++g) {
      int d = sum(sx, -g);
      if (d > 0) {
        gamma = g;
        delta = d;
      }
    }
    if (!gamma) throw std::logic_error("no extraspecial pair for root " + std::to_string(xi));
    int p = 0;
    for (int cur = delta;;) {
      cur = sum(cur, -gamma);
      if (cur == 0) break;
      ++p;
    }
    table_[std::size_t(gamma - 1) * n + (delta - 1)] = p + 1;
    table_[std::size_t(delta - 1) * n + (gamma - 1)] = -(p + 1);
    const int nxi = rs.inner(pos[xi], pos[xi]);
    const int ngd = p + 1;
    for (int a = 1; a <= n; ++a) {
      int b = sum(sx, -a);
      if (b <= 0 || a == gamma || a == delta) continue;
      // Four-root relation for (a, b, -gamma, -delta).
      Rational t = 0;
      int e = sum(b, -gamma);
      if (e != 0) t += frac(long(N(b, -gamma)) * N(a, -delta) * nxi, norm(e));
      int h = sum(a, -gamma);
      if (h != 0) t += frac(long(N(-gamma, a)) * N(b, -delta) * nxi, norm(h));
      t /= ngd;
      if (t.get_den() != 1 || t == 0)
        throw std::logic_error("inconsistent structure constant for root " + std::to_string(xi));
      table_[std::size_t(a - 1) * n + (b - 1)] = int(t.get_num().get_si());
    }
  }
}

RootCoords ChevalleyConstants::coords(int a) const {
  RootCoords c = rs_.positive_roots()[std::abs(a) - 1];
  if (a < 0)
    for (auto& v : c) v = -v;
  return c;
}

int ChevalleyConstants::signed_index(const RootCoords& c) const {
  int p = rs_.positive_index(c);
  if (p >= 0) return p + 1;
  RootCoords neg = c;
  for (auto& v : neg) v = -v;
  p = rs_.positive_index(neg);
  if (p >= 0) return -(p + 1);
  return 0;
}

int ChevalleyConstants::norm(int a) const {
  const auto& r = rs_.positive_roots()[std::abs(a) - 1];
  return rs_.inner(r, r);
}

int ChevalleyConstants::sum(int a, int b) const {
  const int n = n_;
  auto slot = [n](int x) { return x > 0 ? x - 1 : n - x - 1; };
  return sums_[std::size_t(slot(a)) * 2 * n + slot(b)];
}

int ChevalleyConstants::positive_N(int a, int b) const {
  return table_[std::size_t(a - 1) * n_ + (b - 1)];
}

int ChevalleyConstants::N(int a, int b) const {
  int s = sum(a, b);
  if (s == 0) return 0;
  if (a > 0 && b > 0) return positive_N(a, b);
  if (a < 0 && b < 0) return -positive_N(-a, -b);
  // a + b + c = 0 with c = -s; N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
  int c = -s;
  int positives = (a > 0) + (b > 0) + (c > 0);
  if (positives == 2) {
    if (b > 0 && c > 0) return positive_N(b, c) * norm(c) / norm(a);
    return positive_N(c, a) * norm(c) / norm(b);
  }
  return -N(-a, -b);
}

// ---------------------------------------------------------------------------
// LieAlgebra

GVector LieAlgebra::unit(int m) const {
  GVector v(dim_);
  v.at(m) = 1;
  return v;
}

GVector LieAlgebra::dual_coroot(int root) const {
  return to_dense(*this, bracket_basis(pos_index(root), neg_index(root)));
}

std::string LieAlgebra::label(int m) const {
  if (is_cartan(m)) return "h" + std::to_string(m - num_positive() + 1);
  std::string s = is_positive(m) ? "x(" : "x-(";
  const auto& r = rs_.positive_roots()[root_of(m)];
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

void LieAlgebra::finish() {
  const int n = num_positive(), l = rank();
  weights_.assign(dim_, RootCoords(l, 0));
  for (int r = 0; r < n; ++r) {
    weights_[pos_index(r)] = rs_.positive_roots()[r];
    RootCoords neg = rs_.positive_roots()[r];
    for (auto& v : neg) v = -v;
    weights_[neg_index(r)] = neg;
  }

  coroots_.assign(n, GVector(dim_));
  for (int r = 0; r < n; ++r) {
    const auto& a = rs_.positive_roots()[r];
    const int nr = rs_.inner(a, a);
    for (int i = 0; i < l; ++i)
      coroots_[r][cartan_index(i)] = frac(a[i] * rs_.form()[i][i], nr);
  }

  // Trace form on pairs of opposite weight; all other pairs vanish by weight.
  killing_.assign(dim_, std::vector<Rational>(dim_, 0));
  auto trace = [&](int i, int j) {
    Rational t = 0;
    for (int p = 0; p < dim_; ++p)
      for (const auto& q : bracket_basis(j, p))
        for (const auto& w : bracket_basis(i, q.index))
          if (w.index == p) t += w.coeff * q.coeff;
    return t;
  };
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      bool opposite_weight = true;
      for (int c = 0; c < l; ++c)
        if (weights_[i][c] + weights_[j][c] != 0) opposite_weight = false;
      if (!opposite_weight) continue;
      killing_[i][j] = killing_[j][i] = trace(i, j);
    }
}

LieAlgebra build_algebra(const RootSystem& rs) {
  ChevalleyConstants cc(rs);
  LieAlgebra L;
  L.rs_ = rs;
  const int n = int(rs.num_positive()), l = rs.rank();
  L.dim_ = 2 * n + l;
  const int dim = L.dim_;

  // Signed root of each basis index (0 on the Cartan part).
  std::vector<int> sroot(dim, 0);
  for (int r = 0; r < n; ++r) {
    sroot[L.pos_index(r)] = r + 1;
    sroot[L.neg_index(r)] = -(r + 1);
  }
  auto index_of = [&](int s) { return s > 0 ? L.pos_index(s - 1) : L.neg_index(-s - 1); };

  // Brackets on the integral Chevalley basis {e_a, h_i}.
  std::vector<SparseG> chev(std::size_t(dim) * dim);
  auto coroot_terms = [&](int s) {
    SparseG h;
    const auto& a = rs.positive_roots()[std::abs(s) - 1];
    const int na = rs.inner(a, a);
    for (int i = 0; i < l; ++i) {
      int c = a[i] * rs.form()[i][i] / na;
      if (c != 0) h.push_back({L.cartan_index(i), Rational(s > 0 ? c : -c)});
    }
    return h;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      SparseG out;
      int a = sroot[i], b = sroot[j];
      if (a != 0 && b != 0) {
        if (a == -b) {
          out = coroot_terms(a);
        } else if (int s = cc.sum(a, b)) {
          out.push_back({index_of(s), Rational(cc.N(a, b))});
        }
      } else if (a == 0 && b != 0) {
        const auto& beta = rs.positive_roots()[std::abs(b) - 1];
        RootCoords simple(l, 0);
        simple[i - n] = 1;
        int v = rs.pairing(beta, simple) * (b > 0 ? 1 : -1);
        if (v != 0) out.push_back({j, Rational(v)});
      } else if (a != 0 && b == 0) {
        const auto& alpha = rs.positive_roots()[std::abs(a) - 1];
        RootCoords simple(l, 0);
        simple[j - n] = 1;
        int v = -rs.pairing(alpha, simple) * (a > 0 ? 1 : -1);
        if (v != 0) out.push_back({i, Rational(v)});
      }
      chev[std::size_t(i) * dim + j] = std::move(out);
    }

  // kappa_chev(e_alpha, e_{-alpha}) for each positive alpha.
  L.scales_.assign(n, 0);
  for (int r = 0; r < n; ++r) {
    int i = L.pos_index(r), j = L.neg_index(r);
    Rational t = 0;
    for (int p = 0; p < dim; ++p)
      for (const auto& q : chev[std::size_t(j) * dim + p])
        for (const auto& w : chev[std::size_t(i) * dim + q.index])
          if (w.index == p) t += w.coeff * q.coeff;
    if (t == 0) throw std::logic_error("degenerate trace form on " + L.label(i));
    L.scales_[r] = t;
  }

  // x_{-alpha} = e_{-alpha} / kappa_chev(e_alpha, e_{-alpha}).
  std::vector<Rational> sigma(dim, 1);
  for (int r = 0; r < n; ++r) sigma[L.neg_index(r)] = 1 / L.scales_[r];
  L.brackets_.assign(std::size_t(dim) * dim, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      SparseG out;
      for (const auto& t : chev[std::size_t(i) * dim + j])
        out.push_back({t.index, t.coeff * sigma[i] * sigma[j] / sigma[t.index]});
      L.brackets_[std::size_t(i) * dim + j] = std::move(out);
    }
  L.finish();
  return L;
}

LieAlgebra algebra_from_brackets(const RootSystem& rs, std::vector<SparseG> brackets) {
  LieAlgebra L;
  L.rs_ = rs;
  L.dim_ = int(2 * rs.num_positive()) + rs.rank();
  if (brackets.size() != std::size_t(L.dim_) * L.dim_)
    throw std::invalid_argument("bracket table has wrong size for " + rs.name());
  L.brackets_ = std::move(brackets);
  const int n = L.num_positive();
  L.scales_.assign(n, 0);
  L.finish();
  // Recover the Chevalley rescaling: [x_a, x_-a] = H_a / scale.
  for (int r = 0; r < n; ++r) {
    const auto& t = L.bracket_basis(L.pos_index(r), L.neg_index(r));
    const auto& h = L.coroot(r);
    for (const auto& term : t)
      if (h[term.index] != 0) {
        L.scales_[r] = h[term.index] / term.coeff;
        break;
      }
  }
  return L;
}

GVector bracket(const LieAlgebra& L, const GVector& x, const GVector& y) {
  if (int(x.size()) != L.dim() || int(y.size()) != L.dim())
    throw std::invalid_argument("bracket: dimension mismatch");
  GVector out(L.dim());
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& t : L.bracket_basis(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Rational killing(const LieAlgebra& L, const GVector& x, const GVector& y) {
  if (int(x.size()) != L.dim() || int(y.size()) != L.dim())
    throw std::invalid_argument("killing: dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < L.dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < L.dim(); ++j)
      if (y[j] != 0 && L.killing_basis(i, j) != 0) s += x[i] * L.killing_basis(i, j) * y[j];
  }
  return s;
}

std::vector<std::vector<Rational>> adjoint_matrix(const LieAlgebra& L, int i) {
  if (i < 0 || i >= L.dim()) throw std::out_of_range("adjoint_matrix: bad basis index");
  std::vector<std::vector<Rational>> m(L.dim(), std::vector<Rational>(L.dim(), 0));
  for (int j = 0; j < L.dim(); ++j)
    for (const auto& t : L.bracket_basis(i, j)) m[t.index][j] = t.coeff;
  return m;
}

Rational trace_form(const LieAlgebra& L, const GVector& x, const GVector& y) {
  // tr(ad x ad y) = sum_p <e_p^*, [x, [y, e_p]]>
  Rational t = 0;
  for (int p = 0; p < L.dim(); ++p) {
    GVector yp = bracket(L, y, L.unit(p));
    GVector xyp = bracket(L, x, yp);
    t += xyp[p];
  }
  return t;
}

SparseG to_sparse(const GVector& v) {
  SparseG s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back({int(i), v[i]});
  return s;
}

GVector to_dense(const LieAlgebra& L, const SparseG& v) {
  GVector d(L.dim());
  for (const auto& t : v) d.at(t.index) += t.coeff;
  return d;
}

} // namespace lambdag
