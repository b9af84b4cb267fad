#include "lambdag/rootsys.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace lambdag;

namespace {

struct TypeRank {
  char t;
  int l;
};

std::vector<TypeRank> all_small_types() {
  std::vector<TypeRank> v;
  for (int l = 1; l <= 8; ++l) v.push_back({'A', l});
  for (int l = 2; l <= 8; ++l) v.push_back({'B', l});
  for (int l = 3; l <= 8; ++l) v.push_back({'C', l});
  for (int l = 4; l <= 8; ++l) v.push_back({'D', l});
  for (int l = 6; l <= 8; ++l) v.push_back({'E', l});
  v.push_back({'F', 4});
  v.push_back({'G', 2});
  return v;
}

RootCoords neg(RootCoords r) {
  for (int& c : r) c = -c;
  return r;
}

} // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system('A', 2).num_positive() == 3);
  CHECK(build_root_system('F', 4).num_positive() == 24);
  CHECK(build_root_system('E', 7).num_positive() == 63);
  CHECK(build_root_system('E', 6).num_positive() == 36);
  CHECK(build_root_system('E', 8).num_positive() == 120);
  CHECK(build_root_system('G', 2).num_positive() == 6);
  for (int l = 1; l <= 12; ++l) CHECK(build_root_system('A', l).num_positive() == std::size_t(l * (l + 1) / 2));
  for (int l = 2; l <= 12; ++l) CHECK(build_root_system('B', l).num_positive() == std::size_t(l * l));
  for (int l = 3; l <= 12; ++l) CHECK(build_root_system('C', l).num_positive() == std::size_t(l * l));
  for (int l = 4; l <= 12; ++l) CHECK(build_root_system('D', l).num_positive() == std::size_t(l * (l - 1)));
  for (const auto& [t, l] : all_small_types())
    CHECK(long(build_root_system(t, l).num_positive()) == expected_positive_count(t, l));
}

TEST_CASE("highest roots, Bourbaki numbering") {
  CHECK(build_root_system('A', 3).highest_root() == RootCoords{1, 1, 1});
  CHECK(build_root_system('B', 3).highest_root() == RootCoords{1, 2, 2});
  CHECK(build_root_system('C', 3).highest_root() == RootCoords{2, 2, 1});
  CHECK(build_root_system('D', 5).highest_root() == RootCoords{1, 2, 2, 1, 1});
  CHECK(build_root_system('G', 2).highest_root() == RootCoords{3, 2});
  CHECK(build_root_system('F', 4).highest_root() == RootCoords{2, 3, 4, 2});
  CHECK(build_root_system('E', 6).highest_root() == RootCoords{1, 2, 2, 3, 2, 1});
  CHECK(build_root_system('E', 7).highest_root() == RootCoords{2, 2, 3, 4, 3, 2, 1});
  CHECK(build_root_system('E', 8).highest_root() == RootCoords{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("cartan matrix conventions") {
  const RootSystem b2 = build_root_system('B', 2);
  CHECK(b2.cartan() == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  const RootSystem g2 = build_root_system('G', 2);
  // beta_1 short in Bourbaki G2
  CHECK(g2.cartan()[1][0] == -3);
  CHECK(g2.cartan()[0][1] == -1);
  for (const auto& [t, l] : all_small_types()) {
    const RootSystem rs = build_root_system(t, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        const RootCoords a(l, 0), b(l, 0);
        RootCoords bi = a, bj = b;
        bi[i] = 1;
        bj[j] = 1;
        CHECK(rs.pairing(bi, bj) == rs.cartan()[i][j]);
      }
  }
}

TEST_CASE("simple roots come first, heights non-decreasing") {
  for (const auto& [t, l] : all_small_types()) {
    const RootSystem rs = build_root_system(t, l);
    for (int i = 0; i < l; ++i) {
      RootCoords e(l, 0);
      e[i] = 1;
      CHECK(rs.positive_roots()[i] == e);
    }
    for (std::size_t r = 1; r < rs.num_positive(); ++r)
      CHECK(rs.height(rs.positive_roots()[r - 1]) <= rs.height(rs.positive_roots()[r]));
  }
}

TEST_CASE("reflections permute the roots") {
  for (const auto& [t, l] : all_small_types()) {
    const RootSystem rs = build_root_system(t, l);
    for (const auto& a : rs.positive_roots())
      for (int i = 0; i < l; ++i) {
        RootCoords s = a;
        RootCoords bi(l, 0);
        bi[i] = 1;
        s[i] -= rs.pairing(a, bi);
        CHECK(rs.is_root(s));
      }
  }
}

TEST_CASE("root strings are unbroken") {
  for (const auto& [t, l] : all_small_types()) {
    if (l > 6) continue;
    const RootSystem rs = build_root_system(t, l);
    std::vector<RootCoords> all;
    for (const auto& r : rs.positive_roots()) {
      all.push_back(r);
      all.push_back(neg(r));
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a == b || a == neg(b)) continue;
        std::vector<int> ks;
        for (int k = -4; k <= 4; ++k) {
          RootCoords c = a;
          for (int i = 0; i < l; ++i) c[i] += k * b[i];
          if (rs.is_root(c)) ks.push_back(k);
        }
        REQUIRE(!ks.empty());
        CHECK(ks.back() - ks.front() + 1 == int(ks.size()));
        CHECK(ks.size() <= 4);
      }
  }
}

TEST_CASE("extremities") {
  CHECK(extremities(build_root_system('D', 4)) == SimpleSet{0, 2, 3});
  CHECK(extremities(build_root_system('A', 1)).size() == 1);
  CHECK(extremities(build_root_system('A', 5)) == SimpleSet{0, 4});
  for (const auto& [t, l] : all_small_types()) {
    const auto n = extremities(build_root_system(t, l)).size();
    if (t == 'D' || t == 'E')
      CHECK(n == 3);
    else if (t == 'A' && l == 1)
      CHECK(n == 1);
    else
      CHECK(n == 2);
  }
}

TEST_CASE("connected components") {
  const RootSystem a3 = build_root_system('A', 3);
  const auto c = connected_components(a3, {0, 2});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == SimpleSet{0});
  CHECK(c[1] == SimpleSet{2});
  CHECK(connected_components(a3, {}).empty());
  for (const auto& [t, l] : all_small_types()) {
    const RootSystem rs = build_root_system(t, l);
    SimpleSet all;
    for (int i = 0; i < l; ++i) all.push_back(i);
    CHECK(connected_components(rs, all).size() == 1);
  }
  // D5 minus beta_3 leaves A2 and A1 x A1
  const auto d = connected_components(build_root_system('D', 5), complement_of(build_root_system('D', 5), 2));
  CHECK(d.size() == 3);
}

TEST_CASE("root subsystems") {
  const RootSystem a3 = build_root_system('A', 3);
  CHECK(root_subsystem(a3, {0, 1}).size() == 3);
  CHECK(root_subsystem(a3, {}).empty());
  for (int l = 3; l <= 9; ++l) {
    const RootSystem b = build_root_system('B', l);
    for (int s = 1; s <= l - 2; ++s) {
      SimpleSet tail;
      for (int i = s + 1; i < l; ++i) tail.push_back(i);
      CHECK(root_subsystem(b, tail).size() == std::size_t((l - s - 1) * (l - s - 1)));
    }
  }
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_root_system('B', 1), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('C', 2), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('E', 9), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('F', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('G', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system('A', 0), std::invalid_argument);
  CHECK_FALSE(is_subset_of_simple(build_root_system('A', 2), {0, 2}));
}
