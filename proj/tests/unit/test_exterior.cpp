#include "lambdag/exterior.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace lambdag;

namespace {

const LieAlgebra& a2() {
  static const LieAlgebra L = build_algebra(build_root_system('A', 2));
  return L;
}
const LieAlgebra& b2() {
  static const LieAlgebra L = build_algebra(build_root_system('B', 2));
  return L;
}

// parity by counting inversions, independent of merge_sign
int parity(std::vector<int> p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Leibniz formula over all permutations
Rational det_oracle(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    Rational term(parity(p));
    for (std::size_t i = 0; i < n; ++i) term *= m[i][std::size_t(p[i])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

ExteriorVector random_vector(std::mt19937& rng, int dim, int k, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::pair<WedgeIndex, Rational>> t;
  const auto all = all_wedges(dim, k);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < terms; ++i) t.emplace_back(all[pick(rng)], Rational(coeff(rng)));
  return make_vector(k, t);
}

} // namespace

TEST_CASE("alternation and sign conventions") {
  CHECK(monomial({2, 2}).is_zero());
  CHECK(monomial({1, 2}) == Rational(-1) * monomial({2, 1}));
  // (e1 ^ e3) ^ e2 = -(e1 ^ e2 ^ e3)
  CHECK(wedge(monomial({1, 3}), monomial({2})) == Rational(-1) * monomial({1, 2, 3}));
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    std::vector<int> idx(4);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int& i : idx) i *= 3;
    std::vector<int> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    CHECK(monomial(idx) == Rational(parity(idx)) * monomial(sorted));
  }
}

TEST_CASE("graded commutativity") {
  std::mt19937 rng(11);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const ExteriorVector u = random_vector(rng, 10, p, 3), v = random_vector(rng, 10, q, 3);
      const Rational s((p * q) % 2 ? -1 : 1);
      CHECK(wedge(u, v) == s * wedge(v, u));
    }
}

TEST_CASE("monomial basis enumeration") {
  for (int n = 1; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto w = all_wedges(n, k);
      CHECK(w.size() == binomial(n, k));
      for (std::size_t i = 1; i < w.size(); ++i) {
        CHECK(wedge_less(w[i - 1], w[i]));
        CHECK(wedge_indices(w[i - 1]) < wedge_indices(w[i]));
      }
    }
  CHECK(binomial(48, 21) == binomial(48, 27));
  CHECK(binomial(48, 21) == 22314239266528ULL);
  CHECK(binomial(21, 10) == 352716);
  CHECK_THROWS_AS(make_wedge({3, 1}), std::invalid_argument);
}

TEST_CASE("ad on grade 1 is the bracket; Cartan acts by weights") {
  const LieAlgebra& L = a2();
  for (int x = 0; x < L.dim(); ++x)
    for (int y = 0; y < L.dim(); ++y)
      CHECK(ad_basis(L, x, monomial({y})) == from_g(to_dense(L, L.bracket_basis(x, y))));
  const int a = L.pos_index(0), b = L.pos_index(1);
  for (int i = 0; i < L.rank(); ++i) {
    const auto& C = L.root_system().cartan();
    const int wa = C[0][std::size_t(i)], wb = C[1][std::size_t(i)];
    CHECK(ad_basis(L, L.cartan_index(i), monomial({a, b})) == Rational(wa + wb) * monomial({a, b}));
  }
  CHECK(ad_action(L, L.zero(), monomial({a, b})).is_zero());
}

TEST_CASE("Leibniz rule on random vectors") {
  const LieAlgebra& L = b2();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, L.dim() - 1);
  for (int n = 0; n < 60; ++n) {
    const int p = 1 + n % 3, q = 1 + (n / 3) % 2;
    const ExteriorVector u = random_vector(rng, L.dim(), p, 4), v = random_vector(rng, L.dim(), q, 4);
    GVector x = L.zero();
    x[std::size_t(pick(rng))] = 2;
    x[std::size_t(pick(rng))] += -1;
    CHECK(ad_action(L, x, wedge(u, v)) == wedge(ad_action(L, x, u), v) + wedge(u, ad_action(L, x, v)));
  }
}

TEST_CASE("gram on monomials is the determinant of Killing minors") {
  for (const LieAlgebra* Lp : {&a2(), &b2()}) {
    const LieAlgebra& L = *Lp;
    std::mt19937 rng(5);
    for (int k = 1; k <= 3; ++k) {
      const auto all = all_wedges(L.dim(), k);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int n = 0; n < 300; ++n) {
        const WedgeIndex I = all[pick(rng)];
        // choose J as a partner half the time so that nonzero values are exercised
        WedgeIndex J = all[pick(rng)];
        if (n % 2) {
          const auto ps = partners(L, I);
          J = ps[std::size_t(n) % ps.size()];
        }
        const auto ii = wedge_indices(I), jj = wedge_indices(J);
        std::vector<std::vector<Rational>> m(ii.size(), std::vector<Rational>(jj.size()));
        for (std::size_t s = 0; s < ii.size(); ++s)
          for (std::size_t t = 0; t < jj.size(); ++t) m[s][t] = L.killing_basis(ii[s], jj[t]);
        CHECK(gram_basis(L, I, J) == det_oracle(m));
      }
    }
  }
}

TEST_CASE("gram examples") {
  const LieAlgebra& L = a2();
  const int a = L.pos_index(0), na = L.neg_index(0), h = L.cartan_index(0);
  const ExteriorVector w = monomial({a, na});
  CHECK(gram(L, w, w) == -1);
  const ExteriorVector iso = monomial({h, a});
  CHECK(gram(L, iso, iso) == 0);
  CHECK_THROWS(gram(L, monomial({a}), w));
}

TEST_CASE("gram is symmetric and ad-invariant") {
  const LieAlgebra& L = b2();
  std::mt19937 rng(9);
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n < 40; ++n) {
      const ExteriorVector u = random_vector(rng, L.dim(), k, 5), v = random_vector(rng, L.dim(), k, 5);
      CHECK(gram(L, u, v) == gram(L, v, u));
      for (int x = 0; x < L.dim(); ++x)
        CHECK(gram(L, ad_basis(L, x, u), v) + gram(L, u, ad_basis(L, x, v)) == 0);
      CHECK(dot(gram_functional(L, u), v) == gram(L, u, v));
    }
}

TEST_CASE("dimension bound of the mask") {
  const LieAlgebra e8 = build_algebra(build_root_system('E', 8));
  CHECK_THROWS_AS(require_mask_width(e8), std::invalid_argument);
  CHECK_NOTHROW(require_mask_width(b2()));
}
