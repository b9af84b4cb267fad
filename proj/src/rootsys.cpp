#include "lambdag/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lambdag {

namespace {

// Gram matrix of the simple roots for Bourbaki's numbering.
std::vector<std::vector<int>> simple_form(char t, int l) {
  std::vector<std::vector<int>> f(l, std::vector<int>(l, 0));
  auto link = [&](int i, int j, int v) { f[i][j] = f[j][i] = v; };
  switch (t) {
  case 'A':
    for (int i = 0; i < l; ++i) f[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1);
    break;
  case 'B':
    for (int i = 0; i < l; ++i) f[i][i] = 4;
    f[l - 1][l - 1] = 2;
    for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -2);
    break;
  case 'C':
    for (int i = 0; i < l; ++i) f[i][i] = 2;
    f[l - 1][l - 1] = 4;
    for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
    link(l - 2, l - 1, -2);
    break;
  case 'D':
    for (int i = 0; i < l; ++i) f[i][i] = 2;
    for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1);
    link(l - 3, l - 1, -1);
    break;
  case 'E':
    for (int i = 0; i < l; ++i) f[i][i] = 2;
    link(0, 2, -1);
    link(1, 3, -1);
    for (int i = 2; i + 1 < l; ++i) link(i, i + 1, -1);
    break;
  case 'F':
    f[0][0] = f[1][1] = 4;
    f[2][2] = f[3][3] = 2;
    link(0, 1, -2);
    link(1, 2, -2);
    link(2, 3, -1);
    break;
  case 'G':
    f[0][0] = 2;
    f[1][1] = 6;
    link(0, 1, -3);
    break;
  }
  return f;
}

} // namespace

void validate_type(char t, int l) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid simple type " + std::string(1, t) +
                                std::to_string(l) + ": " + why);
  };
  switch (t) {
  case 'A':
    if (l < 1) fail("type A requires rank >= 1");
    break;
  case 'B':
    if (l < 2) fail("type B requires rank >= 2");
    break;
  case 'C':
    if (l < 3) fail("type C requires rank >= 3");
    break;
  case 'D':
    if (l < 4) fail("type D requires rank >= 4");
    break;
  case 'E':
    if (l < 6 || l > 8) fail("type E requires rank 6, 7 or 8");
    break;
  case 'F':
    if (l != 4) fail("type F requires rank 4");
    break;
  case 'G':
    if (l != 2) fail("type G requires rank 2");
    break;
  default:
    fail("type label must be one of A,B,C,D,E,F,G");
  }
  // bitmask-based subsets of simple roots
  if (l > 31) fail("rank must be at most 31");
}

long expected_positive_count(char t, int l) {
  switch (t) {
  case 'A': return long(l) * (l + 1) / 2;
  case 'B':
  case 'C': return long(l) * l;
  case 'D': return long(l) * (l - 1);
  case 'E': return l == 6 ? 36 : l == 7 ? 63 : 120;
  case 'F': return 24;
  case 'G': return 6;
  }
  return -1;
}

int RootSystem::positive_index(const RootCoords& r) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), r,
                             [this](const RootCoords& a, const RootCoords& b) {
                               int ha = height(a), hb = height(b);
                               if (ha != hb) return ha < hb;
                               return a > b;
                             });
  if (it != positive_.end() && *it == r) return int(it - positive_.begin());
  return -1;
}

bool RootSystem::is_root(const RootCoords& r) const {
  if (positive_index(r) >= 0) return true;
  RootCoords neg(r.size());
  std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
  return positive_index(neg) >= 0;
}

int RootSystem::height(const RootCoords& r) const {
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

int RootSystem::pairing(const RootCoords& a, const RootCoords& b) const {
  return 2 * inner(a, b) / inner(b, b);
}

RootSystem build_root_system(char type_label, int rank) {
  validate_type(type_label, rank);
  RootSystem rs;
  rs.type_ = type_label;
  rs.rank_ = rank;
  rs.form_ = simple_form(type_label, rank);
  const int l = rank;
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  rs.adjacency_.assign(l, std::vector<bool>(l, false));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      rs.cartan_[i][j] = 2 * rs.form_[i][j] / rs.form_[j][j];
      rs.adjacency_[i][j] = i != j && rs.form_[i][j] != 0;
    }

  // Grow roots height by height: alpha + beta_i is a root iff q > 0 where
  // q = p - <alpha, beta_i^vee> and p is the length of the downward string.
  std::map<RootCoords, int> known;
  std::vector<RootCoords> layer;
  for (int i = 0; i < l; ++i) {
    RootCoords e(l, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  std::vector<RootCoords> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    for (auto& r : layer) {
      known[r] = 1;
      all.push_back(r);
    }
    std::vector<RootCoords> next;
    for (const auto& r : layer) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        RootCoords down = r;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int c = 0;
        for (int j = 0; j < l; ++j) c += r[j] * rs.cartan_[j][i];
        if (p - c > 0) {
          RootCoords up = r;
          up[i] += 1;
          next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  rs.positive_ = std::move(all);
  return rs;
}

SimpleSet extremities(const RootSystem& rs) {
  SimpleSet out;
  for (int i = 0; i < rs.rank(); ++i) {
    int deg = 0;
    for (int j = 0; j < rs.rank(); ++j) deg += rs.adjacent(i, j);
    if (deg <= 1) out.push_back(i);
  }
  return out;
}

std::vector<SimpleSet> connected_components(const RootSystem& rs, const SimpleSet& X) {
  std::vector<SimpleSet> comps;
  std::vector<bool> in(rs.rank(), false), seen(rs.rank(), false);
  for (int i : X) in.at(i) = true;
  SimpleSet sorted = X;
  std::sort(sorted.begin(), sorted.end());
  for (int start : sorted) {
    if (seen[start]) continue;
    SimpleSet comp;
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < rs.rank(); ++w)
        if (in[w] && !seen[w] && rs.adjacent(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> root_subsystem(const RootSystem& rs, const SimpleSet& X) {
  std::vector<bool> in(rs.rank(), false);
  for (int i : X) in.at(i) = true;
  std::vector<int> out;
  const auto& pos = rs.positive_roots();
  for (std::size_t r = 0; r < pos.size(); ++r) {
    bool ok = true;
    for (int i = 0; i < rs.rank() && ok; ++i)
      if (pos[r][i] != 0 && !in[i]) ok = false;
    if (ok) out.push_back(int(r));
  }
  return out;
}

SimpleSet complement_of(const RootSystem& rs, int i) {
  SimpleSet X;
  for (int j = 0; j < rs.rank(); ++j)
    if (j != i) X.push_back(j);
  return X;
}

bool is_subset_of_simple(const RootSystem& rs, const SimpleSet& X) {
  SimpleSet s = X;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return std::all_of(s.begin(), s.end(), [&](int i) { return i >= 0 && i < rs.rank(); });
}

} // namespace lambdag
