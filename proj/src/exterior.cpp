#include "lambdag/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lambdag {

namespace {

using Acc = std::unordered_map<WedgeIndex, Rational>;

void accumulate(Acc& acc, WedgeIndex w, const Rational& c) {
  auto [it, fresh] = acc.try_emplace(w, c);
  if (!fresh) it->second += c;
}

ExteriorVector finish(int grade, Acc& acc) {
  ExteriorVector out;
  out.grade = grade;
  out.terms.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (sgn(c) != 0) out.terms.emplace_back(w, std::move(c));
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return wedge_less(a.first, b.first); });
  return out;
}

// Bits strictly between positions a and b.
inline WedgeIndex between_mask(int a, int b) {
  if (a > b) std::swap(a, b);
  if (b - a <= 1) return 0;
  const WedgeIndex upto_b = (b >= 64) ? ~WedgeIndex(0) : ((WedgeIndex(1) << b) - 1);
  const WedgeIndex upto_a = (WedgeIndex(1) << (a + 1)) - 1;
  return upto_b & ~upto_a;
}

WedgeIndex cartan_mask(const LieAlgebra& L) {
  WedgeIndex m = 0;
  for (int i = 0; i < L.rank(); ++i) m |= WedgeIndex(1) << L.cartan_index(i);
  return m;
}

WedgeIndex mirror(const LieAlgebra& L, WedgeIndex w) {
  WedgeIndex out = 0;
  while (w) {
    int m = __builtin_ctzll(w);
    w &= w - 1;
    out |= WedgeIndex(1) << L.opposite(m);
  }
  return out;
}

} // namespace

std::vector<int> wedge_indices(WedgeIndex w) {
  std::vector<int> out;
  while (w) {
    out.push_back(__builtin_ctzll(w));
    w &= w - 1;
  }
  return out;
}

WedgeIndex make_wedge(const std::vector<int>& increasing) {
  WedgeIndex w = 0;
  int prev = -1;
  for (int i : increasing) {
    if (i <= prev || i >= 64) throw std::invalid_argument("wedge indices must be strictly increasing and < 64");
    w |= WedgeIndex(1) << i;
    prev = i;
  }
  return w;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  return r;
}

std::vector<WedgeIndex> all_wedges(int n, int k) {
  std::vector<WedgeIndex> out;
  if (k < 0 || k > n || n > 64) return out;
  out.reserve(binomial(n, k));
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    WedgeIndex w = 0;
    for (int i : idx) w |= WedgeIndex(1) << i;
    out.push_back(w);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

Rational ExteriorVector::coefficient(WedgeIndex w) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), w,
                             [](const auto& t, WedgeIndex k) { return wedge_less(t.first, k); });
  if (it != terms.end() && it->first == w) return it->second;
  return Rational(0);
}

ExteriorVector make_vector(int grade, std::vector<std::pair<WedgeIndex, Rational>> terms) {
  Acc acc;
  for (auto& [w, c] : terms) {
    if (grade_of(w) != grade) throw std::invalid_argument("term grade does not match vector grade");
    accumulate(acc, w, c);
  }
  return finish(grade, acc);
}

ExteriorVector scalar_one() {
  ExteriorVector v;
  v.grade = 0;
  v.terms.emplace_back(WedgeIndex(0), Rational(1));
  return v;
}

ExteriorVector monomial(const std::vector<int>& indices, const Rational& coeff) {
  ExteriorVector v;
  v.grade = int(indices.size());
  if (sgn(coeff) == 0) return v;
  std::vector<int> s = indices;
  int swaps = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) return v;
      if (s[i] > s[j]) ++swaps;
    }
  std::sort(s.begin(), s.end());
  v.terms.emplace_back(make_wedge(s), (swaps % 2) ? Rational(-coeff) : coeff);
  return v;
}

ExteriorVector from_g(const GVector& x) {
  ExteriorVector v;
  v.grade = 1;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) v.terms.emplace_back(WedgeIndex(1) << i, x[i]);
  return v;
}

ExteriorVector operator+(const ExteriorVector& a, const ExteriorVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("adding vectors of different grades");
  Acc acc;
  for (const auto& [w, c] : a.terms) accumulate(acc, w, c);
  for (const auto& [w, c] : b.terms) accumulate(acc, w, c);
  return finish(a.grade, acc);
}

ExteriorVector operator*(const Rational& c, const ExteriorVector& a) {
  ExteriorVector out;
  out.grade = a.grade;
  if (sgn(c) == 0) return out;
  out.terms = a.terms;
  for (auto& t : out.terms) t.second *= c;
  return out;
}

ExteriorVector operator-(const ExteriorVector& a, const ExteriorVector& b) { return a + Rational(-1) * b; }

int merge_sign(WedgeIndex u, WedgeIndex v) {
  int count = 0;
  while (v) {
    int j = __builtin_ctzll(v);
    v &= v - 1;
    const WedgeIndex above = (j >= 63) ? 0 : ~((WedgeIndex(1) << (j + 1)) - 1);
    count += __builtin_popcountll(u & above);
  }
  return (count % 2) ? -1 : 1;
}

ExteriorVector wedge(const ExteriorVector& u, const ExteriorVector& v) {
  Acc acc;
  for (const auto& [a, ca] : u.terms)
    for (const auto& [b, cb] : v.terms) {
      if (a & b) continue;
      Rational c = ca * cb;
      if (merge_sign(a, b) < 0) c = -c;
      accumulate(acc, a | b, c);
    }
  return finish(u.grade + v.grade, acc);
}

ExteriorVector ad_basis(const LieAlgebra& L, int a, const ExteriorVector& w) {
  require_mask_width(L);
  Acc acc;
  for (const auto& [I, c] : w.terms) {
    WedgeIndex rest = I;
    while (rest) {
      const int i = __builtin_ctzll(rest);
      rest &= rest - 1;
      const WedgeIndex without = I & ~(WedgeIndex(1) << i);
      for (const auto& t : L.bracket_basis(a, i)) {
        const int m = t.index;
        if ((without >> m) & 1) continue;
        Rational v = c * t.coeff;
        if (__builtin_popcountll(without & between_mask(i, m)) % 2) v = -v;
        accumulate(acc, without | (WedgeIndex(1) << m), v);
      }
    }
  }
  return finish(w.grade, acc);
}

ExteriorVector ad_action(const LieAlgebra& L, const SparseG& x, const ExteriorVector& w) {
  Acc acc;
  for (const auto& t : x) {
    ExteriorVector part = ad_basis(L, t.index, w);
    for (const auto& [J, c] : part.terms) accumulate(acc, J, t.coeff * c);
  }
  return finish(w.grade, acc);
}

ExteriorVector ad_action(const LieAlgebra& L, const GVector& x, const ExteriorVector& w) {
  if (int(x.size()) != L.dim()) throw std::invalid_argument("ad_action: vector length differs from dim g");
  return ad_action(L, to_sparse(x), w);
}

std::vector<WedgeIndex> partners(const LieAlgebra& L, WedgeIndex I) {
  const WedgeIndex cm = cartan_mask(L);
  const WedgeIndex root_part = mirror(L, I & ~cm);
  const int c = __builtin_popcountll(I & cm);
  std::vector<WedgeIndex> out;
  for (WedgeIndex T : all_wedges(L.rank(), c)) {
    WedgeIndex J = root_part;
    for (int i : wedge_indices(T)) J |= WedgeIndex(1) << L.cartan_index(i);
    out.push_back(J);
  }
  return out;
}

Rational gram_basis(const LieAlgebra& L, WedgeIndex I, WedgeIndex J) {
  if (grade_of(I) != grade_of(J)) throw std::invalid_argument("gram of monomials of different grades");
  const WedgeIndex cm = cartan_mask(L);
  if ((J & ~cm) != mirror(L, I & ~cm)) return Rational(0);
  if (__builtin_popcountll(I & cm) != __builtin_popcountll(J & cm)) return Rational(0);
  const auto rows = wedge_indices(I), cols = wedge_indices(J);
  const std::size_t k = rows.size();
  if (k == 0) return Rational(1);
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) m[s][t] = L.killing_basis(rows[s], cols[t]);
  return determinant(std::move(m));
}

ExteriorVector gram_functional(const LieAlgebra& L, const ExteriorVector& w) {
  require_mask_width(L);
  Acc acc;
  for (const auto& [I, c] : w.terms)
    for (WedgeIndex J : partners(L, I)) {
      Rational g = gram_basis(L, I, J);
      if (sgn(g) != 0) accumulate(acc, J, c * g);
    }
  return finish(w.grade, acc);
}

Rational dot(const ExteriorVector& a, const ExteriorVector& b) {
  Rational s(0);
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    if (a.terms[i].first == b.terms[j].first) {
      s += a.terms[i].second * b.terms[j].second;
      ++i;
      ++j;
    } else if (wedge_less(a.terms[i].first, b.terms[j].first)) {
      ++i;
    } else {
      ++j;
    }
  }
  return s;
}

Rational gram(const LieAlgebra& L, const ExteriorVector& a, const ExteriorVector& b) {
  if (a.grade != b.grade) throw std::invalid_argument("gram: grade mismatch");
  if (a.terms.size() <= b.terms.size()) return dot(gram_functional(L, a), b);
  return dot(a, gram_functional(L, b));
}

void require_mask_width(const LieAlgebra& L) {
  if (L.dim() > 64)
    throw std::invalid_argument("exterior powers are limited to dim g <= 64, got " + std::to_string(L.dim()) +
                                " for " + L.root_system().name());
}

} // namespace lambdag
