#include "lambdag/verify.hpp"

#include <doctest.h>

#include <set>

using namespace lambdag;

namespace {

const LieAlgebra& alg(char t, int l) { return algebra_for(t, l); }

RootCoords weight_of(const LieAlgebra& L, WedgeIndex w) {
  RootCoords s(std::size_t(L.rank()), 0);
  for (int i : wedge_indices(w))
    for (int j = 0; j < L.rank(); ++j) s[std::size_t(j)] += L.weight(i)[std::size_t(j)];
  return s;
}

Subspace V_ku(const LieAlgebra& L, int beta, int k) {
  const ParabolicData pd = build_parabolic(L, complement_of(L.root_system(), beta));
  return closure(L, exterior_power(units(L, pd.p_minus_u), k), basis_actors(L, pd.p_u));
}

} // namespace

TEST_CASE("report layout and ordering") {
  CaseReport a;
  a.statement = "theorem-tint";
  a.paper_anchor = anchor_for("theorem-tint");
  a.params["type"] = "A";
  a.params["rank"] = 2;
  a.params["k"] = 10;
  CaseReport b = a;
  b.params["k"] = 9;
  b.outcome = Outcome::Skipped;
  b.note = "n";
  CaseReport c = a;
  c.statement = "prs";
  c.paper_anchor = anchor_for("prs");
  const Json doc = report_json(Json{{"command", "x"}}, {c, a, b});
  std::vector<std::string> top;
  for (auto it = doc.begin(); it != doc.end(); ++it) top.push_back(it.key());
  CHECK(top == std::vector<std::string>{"version", "config", "cases"});
  REQUIRE(doc["cases"].size() == 3);
  CHECK(doc["cases"][0]["params"]["k"] == 9);
  CHECK(doc["cases"][1]["params"]["k"] == 10);
  CHECK(doc["cases"][2]["statement"] == "prs");
  std::vector<std::string> fields;
  for (auto it = doc["cases"][0].begin(); it != doc["cases"][0].end(); ++it) fields.push_back(it.key());
  CHECK(fields == std::vector<std::string>{"statement", "paper_anchor", "params", "outcome", "dims", "note", "elapsed_ms"});
  CHECK(doc["cases"][1]["paper_anchor"] == "Theorem tint");
  CHECK(strip_elapsed(doc)["cases"][0].contains("elapsed_ms") == false);
  CHECK(exit_code({a, b}) == 0);
  c.outcome = Outcome::Fail;
  CHECK(exit_code({a, c}) == 1);
  CHECK_THROWS_AS(anchor_for("nope"), std::invalid_argument);
}

TEST_CASE("theorem examples") {
  for (int k = 1; k <= 3; ++k) CHECK(verify_theorem(alg('A', 2), {0}, k).outcome == Outcome::Pass);
  for (int k = 1; k <= 6; ++k) CHECK(verify_theorem(alg('G', 2), {0}, k).outcome == Outcome::Pass);
  for (int k = 1; k <= 6; ++k) CHECK(verify_theorem(alg('A', 3), {0, 2}, k).outcome == Outcome::Pass);
  const CaseReport r = verify_theorem(alg('B', 2), {1}, 3);
  CHECK(r.params["X"] == Json::array({2}));
  CHECK(r.dims["closure"] == r.dims["ambient"]);
}

TEST_CASE("theorem: degenerate and refused cases") {
  CHECK(verify_theorem(alg('A', 2), {}, 2).outcome == Outcome::Skipped);
  const CaseReport big = verify_theorem(alg('F', 4), {0, 1}, 3);
  CHECK(big.outcome == Outcome::Skipped);
  CHECK(big.note.has_value());
  VerifyLimits tight;
  tight.max_ambient = 10;
  CHECK(verify_theorem(alg('A', 2), {0}, 2, tight).outcome == Outcome::Skipped);
  CHECK_THROWS_AS(verify_theorem(alg('A', 2), {0}, 4), ConfigError);
  CHECK_THROWS_AS(verify_theorem(alg('A', 2), {5}, 1), ConfigError);
  CHECK_THROWS_AS(verify_orthogonality(alg('A', 2), {0}, 1, "n7"), ConfigError);
  CHECK_THROWS_AS(verify_orthogonality(alg('A', 3), {0}, 1, "n10"), ConfigError);
}

TEST_CASE("orthogonality and c2oc2 on rank two") {
  for (char t : {'A', 'B', 'G'}) {
    const LieAlgebra& L = alg(t, 2);
    for (int b = 0; b < 2; ++b) {
      const SimpleSet X = complement_of(L.root_system(), b);
      for (int k = 1; k <= 3; ++k)
        for (const char* g : {"n3", "n5", "n10"}) CHECK(verify_orthogonality(L, X, k, g).outcome == Outcome::Pass);
      const int d = build_parabolic(L, X).d;
      for (int k = 1; k <= d; ++k) CHECK(verify_c2oc2(L, X, k).outcome == Outcome::Pass);
    }
  }
}

TEST_CASE("wedge lemma instances") {
  for (char t : {'A', 'B'})
    for (const auto& inst : wedge_lemma_instances(alg(t, 2)))
      CHECK_MESSAGE(verify_wedge_lemma(alg(t, 2), inst).outcome == Outcome::Pass, inst.name);
  const LieAlgebra& L = alg('A', 2);
  WedgeInstance bad{"unstable", full_space(L, 1), row_reduce(1, {monomial({0})}), all_basis_actors(L)};
  CHECK_THROWS_AS(verify_wedge_lemma(L, bad), ConfigError);
}

// The module V_{2,u} for A2, beta = beta_1 is the irreducible of lowest weight
// -2 beta_1 - beta_2. Its weights, in simple-root coordinates, worked out by hand
// from Sym^3 of the dual standard representation.
TEST_CASE("A2, k = 2: V_u is the 10-dimensional irreducible") {
  const LieAlgebra& L = alg('A', 2);
  const std::set<RootCoords> w10 = {{-2, -1}, {1, -1}, {1, 2}, {-1, -1}, {-1, 0},
                                    {0, -1},  {1, 0},  {0, 1}, {1, 1},   {0, 0}};
  const Subspace V = V_ku(L, 0, 2);
  REQUIRE(V.dim() == 10);
  std::set<RootCoords> seen;
  for (const auto& v : V.basis()) {
    const RootCoords w = weight_of(L, v.terms.front().first);
    for (const auto& [m, c] : v.terms) CHECK(weight_of(L, m) == w);
    CHECK(w10.count(w) == 1);
    seen.insert(w);
  }
  CHECK(seen == w10);

  const int theta = 2;
  // x_-theta ^ x_-beta_2 has weight (-1, -2): not a weight of V
  const ExteriorVector pd_vec = monomial({L.neg_index(theta), L.neg_index(1)});
  CHECK(w10.count(weight_of(L, pd_vec.terms.front().first)) == 0);
  CHECK_FALSE(V.contains(pd_vec));
  // weight (-1, 0) is a single line of V, and it is not x_beta_2 ^ x_-theta alone
  const ExteriorVector g_alpha = monomial({L.pos_index(1), L.neg_index(theta)});
  for (const auto& v : V.basis())
    if (weight_of(L, v.terms.front().first) == RootCoords{-1, 0}) CHECK(v.terms.size() > 1);
  CHECK_FALSE(V.contains(g_alpha));
}

TEST_CASE("submodule chain: cau1 and lau1 hold, cau2 and pau2 have counterexamples") {
  const LieAlgebra& L = alg('A', 2);
  for (int b = 0; b < 2; ++b) {
    const auto k1 = verify_invariant_subspaces(L, b, 1);
    REQUIRE(k1.size() == 3);
    for (const auto& r : k1) CHECK(r.outcome == Outcome::Pass);
    const auto k2 = verify_invariant_subspaces(L, b, 2);
    CHECK(k2[0].statement == "cau1");
    CHECK(k2[0].outcome == Outcome::Pass);
    CHECK(k2[1].statement == "lau1");
    CHECK(k2[1].outcome == Outcome::Pass);
    CHECK(k2[2].statement == "cau2");
    CHECK(k2[2].outcome == Outcome::Fail);
    CHECK(verify_pau2(L, b, 1).outcome == Outcome::Pass);
    const CaseReport p = verify_pau2(L, b, 2);
    CHECK(p.outcome == Outcome::Fail);

    // witnesses re-check on their own
    const Subspace V = V_ku(L, b, 2);
    REQUIRE(k2[2].witness.has_value());
    CHECK_FALSE(V.contains(vector_from_json(L, (*k2[2].witness)["vector"])));
    REQUIRE(p.witness.has_value());
    CHECK((*p.witness)["module"] == "scalars");
    CHECK_FALSE(V.contains(vector_from_json(L, (*p.witness)["vector"])));
  }
  // the omega containment itself survives at k = 2
  const auto r = verify_invariant_subspaces(L, 0, 2);
  for (const auto& s : (*r[2].witness)["all_violated"]) CHECK(s.get<std::string>().rfind("omega", 0) != 0);
}

TEST_CASE("appendix records") {
  const auto recs = verify_appendix("ABCDEFG", 12);
  int main_records = 0, tables = 0;
  for (const auto& r : recs) {
    CHECK(r.outcome != Outcome::Fail);
    if (r.statement == "prs" && !r.params.contains("formula")) ++main_records;
    if (r.statement == "rs4-tables") ++tables;
  }
  CHECK(main_records == 4);
  CHECK(tables == 5);
  auto find = [&](const std::string& t, const std::string& f) {
    for (const auto& r : recs)
      if (r.params.value("type", "") == t && r.params.value("formula", "") == f) return r;
    FAIL("missing record " << t << " " << f);
    return CaseReport{};
  };
  CHECK(find("D", "n2").outcome == Outcome::Note);
  CHECK(find("A", "n-2d-n1").outcome == Outcome::Pass);
  CHECK(find("D", "n-2d-n2").outcome == Outcome::Pass);
  CHECK(find("D", "n-2d-n1").outcome == Outcome::Note);
  CHECK_THROWS_AS(verify_appendix("X", 5), ConfigError);
  CHECK_THROWS_AS(verify_appendix("A", 13), ConfigError);
}

TEST_CASE("witness vectors round trip") {
  const LieAlgebra& L = alg('B', 2);
  const ExteriorVector v = monomial({0, 3, 7}, frac(-3, 2)) + monomial({1, 2, 9});
  const ExteriorVector w = vector_from_json(L, vector_json(L, v));
  CHECK(w.grade == 3);
  CHECK(w.terms == v.terms);
  Json bad = vector_json(L, v);
  bad["terms"][0]["wedge"][0] = "x(9,9)";
  CHECK_THROWS_AS(vector_from_json(L, bad), std::invalid_argument);
}

TEST_CASE("job runner keeps task order") {
  std::vector<Task> tasks;
  for (int i = 0; i < 20; ++i)
    tasks.push_back(one([i] {
      CaseReport r;
      r.statement = "lint";
      r.params["i"] = i;
      return r;
    }));
  const auto a = run_jobs(tasks, 1), b = run_jobs(tasks, 4);
  REQUIRE(a.size() == 20);
  for (int i = 0; i < 20; ++i) CHECK(b[std::size_t(i)].params["i"] == i);
  std::vector<Task> boom{one([]() -> CaseReport { throw ConfigError("x"); })};
  CHECK_THROWS_AS(run_jobs(boom, 2), ConfigError);
}

TEST_CASE("axioms and nondegeneracy on small algebras") {
  CHECK_FALSE(algebra_axiom_violation(alg('A', 2)).has_value());
  CHECK(gram_rank(alg('A', 2), 2) == binomial(8, 2));
  CHECK(gram_rank(alg('B', 2), 3) == binomial(10, 3));
}

TEST_CASE("subset enumeration") {
  const auto s = nonempty_subsets(3);
  CHECK(s.size() == 7);
  CHECK(s.front() == SimpleSet{0});
  CHECK(s.back() == SimpleSet{0, 1, 2});
}
