#include "lambdag/verify.hpp"

#include "lambdag/sc_cache.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <thread>

namespace lambdag {

namespace {

template <class F>
CaseReport timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseReport r = f();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CaseReport start(const std::string& statement, const LieAlgebra* L) {
  CaseReport r;
  r.statement = statement;
  r.paper_anchor = anchor_for(statement);
  if (L) {
    r.params["type"] = std::string(1, L->root_system().type_label());
    r.params["rank"] = L->rank();
  }
  return r;
}

void fail(CaseReport& r, Json witness) {
  r.outcome = Outcome::Fail;
  r.witness = std::move(witness);
}

void skip(CaseReport& r, const std::string& why) {
  r.outcome = Outcome::Skipped;
  r.note = why;
}

SimpleSet normalized(const RootSystem& rs, SimpleSet X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  if (!is_subset_of_simple(rs, X)) throw ConfigError("X contains an index outside 1.." + std::to_string(rs.rank()));
  return X;
}

std::optional<std::string> exterior_refusal(const LieAlgebra& L, int k, const VerifyLimits& lim) {
  if (L.rank() > lim.max_exterior_rank)
    return "exterior-power checks are limited to rank <= " + std::to_string(lim.max_exterior_rank);
  if (L.dim() > 64) return "dim g exceeds 64";
  const auto amb = binomial(L.dim(), k);
  if (amb > lim.max_ambient)
    return "C(dim g, k) = " + std::to_string(amb) + " exceeds the ambient cap " + std::to_string(lim.max_ambient);
  return std::nullopt;
}

Subspace grade_one(const std::vector<GVector>& vs) {
  std::vector<ExteriorVector> v;
  for (const auto& x : vs) v.push_back(from_g(x));
  return row_reduce(1, v);
}

Subspace scalars() { return row_reduce(0, {scalar_one()}); }

Json missing_vector(const LieAlgebra& L, const Subspace& big, const Subspace& small) {
  // a basis vector of big outside small
  for (const auto& v : big.basis())
    if (!small.contains(v)) return vector_json(L, v);
  return Json();
}

Json multi_index_json(const std::vector<int>& i) {
  Json a = Json::array();
  for (int v : i) a.push_back(v);
  return a;
}

} // namespace

// ---------------------------------------------------------------------------

CaseReport verify_theorem(const LieAlgebra& L, const SimpleSet& Xin, int k, const VerifyLimits& lim) {
  return timed([&] {
    CaseReport r = start("theorem-tint", &L);
    const SimpleSet X = normalized(L.root_system(), Xin);
    if (k < 1 || k > L.num_positive())
      throw ConfigError("k must lie in 1.." + std::to_string(L.num_positive()) + " for " + L.root_system().name());
    r.params["X"] = simple_set_json(X);
    r.params["k"] = k;
    const auto amb = binomial(L.dim(), k);
    r.dims["ambient"] = amb;
    if (X.empty()) {
      skip(r, "empty X: V_{k,p} is already all of Lambda^k g");
      return r;
    }
    if (auto why = exterior_refusal(L, k, lim)) {
      skip(r, *why);
      return r;
    }
    const ParabolicData pd = build_parabolic(L, X);
    const Subspace V = span_V(L, pd, k);
    r.dims["V"] = V.dim();
    const Subspace C = closure(L, V, all_basis_actors(L));
    r.dims["closure"] = C.dim();
    if (C.dim() != amb) {
      for (WedgeIndex w : all_wedges(L.dim(), k)) {
        ExteriorVector e = make_vector(k, {{w, Rational(1)}});
        if (!C.contains(e)) {
          fail(r, Json{{"missing", vector_json(L, e)}});
          break;
        }
      }
    }
    return r;
  });
}

CaseReport verify_orthogonality(const LieAlgebra& L, const SimpleSet& Xin, int k, const std::string& grading,
                                const VerifyLimits& lim) {
  return timed([&] {
    CaseReport r = start(grading == "n3" ? "coc2" : "loc2", &L);
    const SimpleSet X = normalized(L.root_system(), Xin);
    if (k < 1 || k > L.dim()) throw ConfigError("k must lie in 1..dim g");
    r.params["X"] = simple_set_json(X);
    r.params["k"] = k;
    r.params["grading"] = grading;
    GradedDecomposition dec;
    const ParabolicData pd = build_parabolic(L, X);
    if (grading == "n3") {
      dec = decomposition_n3(L, pd);
    } else if (grading == "n5") {
      dec = decomposition_n5(L, pd);
    } else if (grading == "n10") {
      if (int(X.size()) != L.rank() - 1 || L.rank() < 2)
        throw ConfigError("the n10 grading needs rank >= 2 and X = Pi minus one simple root");
      int beta = 0;
      while (std::binary_search(X.begin(), X.end(), beta)) ++beta;
      r.params["beta"] = beta + 1;
      dec = decomposition_n10(L, beta);
    } else {
      throw ConfigError("unknown grading '" + grading + "' (expected n3, n5 or n10)");
    }
    const auto amb = binomial(L.dim(), k);
    r.dims["ambient"] = amb;
    if (auto why = exterior_refusal(L, k, lim)) {
      skip(r, *why);
      return r;
    }
    auto pieces = graded_pieces(dec, k);
    std::uint64_t total = 0;
    Subspace all(k);
    std::map<std::vector<int>, std::size_t> where;
    std::vector<std::vector<ExteriorVector>> B(pieces.size()), F(pieces.size());
    std::size_t nonzero = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      where[pieces[p].multi_index] = p;
      B[p] = pieces[p].space.basis();
      total += B[p].size();
      if (!B[p].empty()) ++nonzero;
      for (const auto& v : B[p]) {
        all.add(v);
        F[p].push_back(gram_functional(L, v));
      }
    }
    r.dims["pieces"] = nonzero;
    r.dims["sum_of_dims"] = total;
    if (total != amb || all.dim() != amb) {
      fail(r, Json{{"reason", "graded pieces do not form a direct sum decomposition"},
                   {"sum_of_dims", total},
                   {"span", all.dim()}});
      return r;
    }
    std::uint64_t pairs = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (B[p].empty()) continue;
      const auto star = dec.star_of(pieces[p].multi_index);
      for (std::size_t q = 0; q < pieces.size(); ++q) {
        if (B[q].empty() || pieces[q].multi_index == star) continue;
        ++pairs;
        for (std::size_t a = 0; a < F[p].size(); ++a)
          for (const auto& w : B[q]) {
            Rational v = dot(F[p][a], w);
            if (sgn(v) != 0) {
              fail(r, Json{{"reason", "pieces with i' != i* pair nontrivially"},
                           {"i", multi_index_json(pieces[p].multi_index)},
                           {"i_prime", multi_index_json(pieces[q].multi_index)},
                           {"u", vector_json(L, B[p][a])},
                           {"v", vector_json(L, w)},
                           {"gram", to_short(v)}});
              return r;
            }
          }
      }
      // Complement identity: the pairing against C_{i*} must be perfect.
      auto it = where.find(star);
      const std::size_t q = (it == where.end()) ? pieces.size() : it->second;
      const std::size_t dim_star = (q == pieces.size()) ? 0 : B[q].size();
      std::size_t rank = 0;
      if (dim_star == B[p].size()) {
        Echelon<std::uint64_t, std::less<std::uint64_t>> m;
        for (const auto& f : F[p]) {
          SparseRow<std::uint64_t> row;
          for (std::size_t b = 0; b < dim_star; ++b) {
            Rational v = dot(f, B[q][b]);
            if (sgn(v) != 0) row.emplace_back(b, v);
          }
          m.insert(row);
        }
        rank = m.size();
      }
      if (dim_star != B[p].size() || rank != B[p].size()) {
        fail(r, Json{{"reason", "orthogonal complement of C_i is not the sum of the C_i' with i' != i*"},
                     {"i", multi_index_json(pieces[p].multi_index)},
                     {"dim", B[p].size()},
                     {"dim_star", dim_star},
                     {"pairing_rank", rank}});
        return r;
      }
    }
    r.dims["pairs_checked"] = pairs;
    return r;
  });
}

CaseReport verify_c2oc2(const LieAlgebra& L, const SimpleSet& Xin, int k, const VerifyLimits& lim) {
  return timed([&] {
    CaseReport r = start("c2oc2", &L);
    const SimpleSet X = normalized(L.root_system(), Xin);
    r.params["X"] = simple_set_json(X);
    r.params["k"] = k;
    const ParabolicData pd = build_parabolic(L, X);
    if (k < 1 || k > pd.d) throw ConfigError("k must lie in 1..d = " + std::to_string(pd.d));
    r.dims["ambient"] = binomial(L.dim(), k);
    if (auto why = exterior_refusal(L, k, lim)) {
      skip(r, *why);
      return r;
    }
    const Subspace rest = full_space(L, k - 1);
    {
      const Subspace A = exterior_power(units(L, pd.p_minus_u), k);
      const Subspace lhs = orthogonal_complement(L, A);
      const Subspace rhs = wedge_span(grade_one(pd.p_minus_basis(L)), rest);
      r.dims["perp_Lambda_k_p_-u"] = lhs.dim();
      r.dims["p_-_wedge_Lambda_k-1_g"] = rhs.dim();
      if (!(lhs == rhs)) {
        fail(r, Json{{"part", "i"}, {"vector", vector_json(L, *difference_witness(lhs, rhs))}});
        return r;
      }
    }
    {
      std::vector<int> pm = pd.p_u;
      pm.insert(pm.end(), pd.p_minus_u.begin(), pd.p_minus_u.end());
      const Subspace A = exterior_power(units(L, pm), k);
      const Subspace lhs = orthogonal_complement(L, A);
      const Subspace rhs = wedge_span(grade_one(pd.l_basis(L)), rest);
      r.dims["perp_Lambda_k_p_pm_u"] = lhs.dim();
      r.dims["l_wedge_Lambda_k-1_g"] = rhs.dim();
      if (!(lhs == rhs)) {
        fail(r, Json{{"part", "ii"}, {"vector", vector_json(L, *difference_witness(lhs, rhs))}});
        return r;
      }
    }
    return r;
  });
}

std::vector<CaseReport> verify_invariant_subspaces(const LieAlgebra& L, int beta, int k, const VerifyLimits& lim) {
  const RootSystem& rs = L.root_system();
  if (beta < 0 || beta >= rs.rank()) throw ConfigError("beta must lie in 1.." + std::to_string(rs.rank()));
  if (rs.rank() < 2) throw ConfigError("invariant-subspace checks need rank >= 2");
  const ParabolicData pd = build_parabolic(L, complement_of(rs, beta));
  if (k < 1 || k > pd.d) throw ConfigError("k must lie in 1..d = " + std::to_string(pd.d));

  CaseReport c1 = start("cau1", &L), l1 = start("lau1", &L), c2 = start("cau2", &L);
  for (CaseReport* r : {&c1, &l1, &c2}) {
    r->params["beta"] = beta + 1;
    r->params["k"] = k;
    r->dims["ambient"] = binomial(L.dim(), k);
  }
  if (auto why = exterior_refusal(L, k, lim)) {
    for (CaseReport* r : {&c1, &l1, &c2}) skip(*r, *why);
    return {c1, l1, c2};
  }
  const Actors g = all_basis_actors(L);
  const Actors pu = basis_actors(L, pd.p_u);
  std::vector<int> cart;
  for (int i = 0; i < L.rank(); ++i) cart.push_back(L.cartan_index(i));
  const Actors h = basis_actors(L, cart);

  auto t0 = std::chrono::steady_clock::now();
  auto lap = [&t0] {
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    t0 = t1;
    return ms;
  };

  // cau1: V_k_u is g-stable and W_k is its perp, for p_u and for g alike
  const Subspace Vku = closure(L, exterior_power(units(L, pd.p_minus_u), k), pu);
  const Subspace W = wedge_span(grade_one(pd.p_minus_basis(L)), full_space(L, k - 1));
  const Subspace Wk = biggest_submodule_in(L, W, pu);
  const Subspace Wk_g = biggest_submodule_in(L, W, g);
  c1.dims["V_k_u"] = Vku.dim();
  c1.dims["p_-_wedge_Lambda_k-1_g"] = W.dim();
  c1.dims["W_k"] = Wk.dim();
  if (auto w = stability_witness(L, Vku, g)) {
    fail(c1, Json{{"part", "ii"}, {"reason", "V_k_u is not g-stable"}, {"vector", vector_json(L, w->vector)},
                  {"actor", L.label(g[w->actor][0].index)}});
  } else if (const Subspace perpV = orthogonal_complement(L, Vku); !(perpV == Wk)) {
    fail(c1, Json{{"part", "ii"},
                  {"reason", "perp of V_k_u differs from W_k"},
                  {"vector", vector_json(L, *difference_witness(perpV, Wk))}});
  } else if (!(Wk == Wk_g)) {
    fail(c1, Json{{"part", "i"},
                  {"reason", "biggest p_u-submodule differs from biggest g-submodule"},
                  {"vector", vector_json(L, *difference_witness(Wk, Wk_g))}});
  }
  c1.elapsed_ms = lap();

  // lau1: u-invariants of p_- ^ Lambda^{k-1} g
  const Subspace W0 = u_invariants(L, W);
  l1.dims["W_k0"] = W0.dim();
  l1.dims["W_k"] = Wk_g.dim();
  if (!Wk.contains(W0)) {
    fail(l1, Json{{"part", "ii"}, {"reason", "W_k0 not inside W_k"}, {"vector", missing_vector(L, W0, Wk)}});
  } else if (auto w = stability_witness(L, W0, h)) {
    fail(l1, Json{{"part", "ii"}, {"reason", "W_k0 not h-stable"}, {"vector", vector_json(L, w->vector)}});
  } else if (const Subspace G0 = closure(L, W0, g); !(G0 == Wk_g)) {
    fail(l1, Json{{"part", "iii"},
                  {"reason", "g-module generated by W_k0 differs from the biggest submodule"},
                  {"vector", vector_json(L, *difference_witness(G0, Wk_g))}});
  }
  l1.elapsed_ms = lap();

  // cau2: containments in V_k_u, all of them checked
  const BetaData bd = beta_data(L, beta);
  std::vector<int> yneg;
  for (int a : bd.Y) yneg.push_back(L.neg_index(a));
  const auto Em = units(L, yneg);
  const Subspace Em1 = exterior_power(Em, k - 1);
  int checked = 0;
  Json violated = Json::array();
  auto contained = [&](const std::string& item, const std::string& what, const Subspace& S) {
    ++checked;
    if (Vku.contains(S)) return;
    violated.push_back(what);
    if (c2.outcome != Outcome::Fail)
      fail(c2, Json{{"item", item}, {"space", what}, {"vector", missing_vector(L, S, Vku)}});
  };
  for (int a : bd.Z) {
    const std::string tag = " (alpha=" + L.label(L.pos_index(a)) + ")";
    if (k >= 2) {
      const OmegaForms f = omega_forms(L, beta, a);
      contained("i", "omega_alpha ^ Lambda^{k-2} E_-" + tag,
                wedge_span(row_reduce(2, {f.omega}), exterior_power(Em, k - 2)));
    }
    contained("ii", "g^alpha ^ Lambda^{k-1} E_-" + tag, wedge_span(grade_one({L.unit(L.pos_index(a))}), Em1));
    contained("iii", "H_alpha ^ Lambda^{k-1} E_-" + tag, wedge_span(grade_one({L.coroot(a)}), Em1));
    contained("iii", "g^-alpha ^ Lambda^{k-1} E_-" + tag, wedge_span(grade_one({L.unit(L.neg_index(a))}), Em1));
  }
  contained("iv", "h_beta ^ Lambda^{k-1} E_-", wedge_span(grade_one(bd.h_beta), Em1));
  c2.dims["V_k_u"] = Vku.dim();
  c2.dims["containments"] = checked;
  c2.dims["violated"] = violated.size();
  if (!violated.empty()) (*c2.witness)["all_violated"] = violated;
  c2.elapsed_ms = lap();
  return {c1, l1, c2};
}

CaseReport verify_pau2(const LieAlgebra& L, int beta, int k, const VerifyLimits& lim) {
  return timed([&] {
    CaseReport r = start("pau2", &L);
    const RootSystem& rs = L.root_system();
    if (beta < 0 || beta >= rs.rank()) throw ConfigError("beta must lie in 1.." + std::to_string(rs.rank()));
    if (rs.rank() < 2) throw ConfigError("these checks need rank >= 2");
    const ParabolicData pd = build_parabolic(L, complement_of(rs, beta));
    r.params["beta"] = beta + 1;
    r.params["k"] = k;
    if (k < 1 || k > pd.d) throw ConfigError("k must lie in 1..d = " + std::to_string(pd.d));
    r.dims["ambient"] = binomial(L.dim(), k);
    if (auto why = exterior_refusal(L, k, lim)) {
      skip(r, *why);
      return r;
    }
    const Actors pu = basis_actors(L, pd.p_u), pm = basis_actors(L, pd.p_minus_u);
    const Subspace dsp = grade_one(units(L, pd.d_indices()));
    const auto Pu = units(L, pd.p_u), Pm = units(L, pd.p_minus_u);
    const int theta = L.num_positive() - 1;
    int checked = 0;
    Json violated = Json::array();
    for (int i = 0; i < k; ++i) {
      for (int half = 0; half < 2; ++half) {
        // half 0: P_u-modules M and Lambda p_{-,u}; half 1: the mirror statement.
        const auto& Up = half == 0 ? Pu : Pm;   // acting radical
        const auto& Dn = half == 0 ? Pm : Pu;   // exterior factor
        const Actors& act = half == 0 ? pu : pm;
        std::vector<std::pair<std::string, Subspace>> mods;
        if (i == 0) {
          mods.emplace_back("scalars", scalars());
        } else {
          mods.emplace_back("Lambda^i of the radical", exterior_power(Up, i));
          mods.emplace_back("generated by Lambda^i of the opposite radical", closure(L, exterior_power(Dn, i), act));
          mods.emplace_back("Lambda^i g", full_space(L, i));
          if (i == 1)
            mods.emplace_back(half == 0 ? "x_theta" : "x_-theta",
                              grade_one({L.unit(half == 0 ? L.pos_index(theta) : L.neg_index(theta))}));
        }
        for (const auto& [name, M] : mods) {
          if (stability_witness(L, M, act))
            throw std::logic_error("pau2 module '" + name + "' is not stable under its radical");
          const Subspace lhs = closure(L, wedge_span(exterior_power(Dn, k - i), M), act);
          const Subspace rhs = wedge_span(wedge_span(exterior_power(Dn, k - i - 1), dsp), M);
          ++checked;
          if (lhs.contains(rhs)) continue;
          const Json where{{"half", half == 0 ? "i" : "ii"}, {"i", i}, {"module", name}};
          violated.push_back(where);
          if (r.outcome != Outcome::Fail) {
            Json w = where;
            w["vector"] = missing_vector(L, rhs, lhs);
            fail(r, w);
          }
        }
      }
    }
    r.dims["instances"] = checked;
    r.dims["violated"] = violated.size();
    if (!violated.empty()) (*r.witness)["all_violated"] = violated;
    return r;
  });
}

CaseReport verify_wedge_lemma(const LieAlgebra& L, const WedgeInstance& inst) {
  return timed([&] {
    CaseReport r = start("lint", &L);
    r.params["instance"] = inst.name;
    if (auto w = stability_witness(L, inst.W, inst.actors))
      throw ConfigError("W' is not stable under the acting algebra in instance " + inst.name);
    const Subspace lhs = closure(L, wedge_span(inst.V, inst.W), inst.actors);
    const Subspace rhs = wedge_span(closure(L, inst.V, inst.actors), inst.W);
    r.dims["closure_of_V_wedge_W"] = lhs.dim();
    r.dims["closure_of_V_wedge_W_prime"] = rhs.dim();
    if (!(lhs == rhs)) fail(r, Json{{"vector", vector_json(L, *difference_witness(lhs, rhs))}});
    return r;
  });
}

std::vector<WedgeInstance> wedge_lemma_instances(const LieAlgebra& L) {
  const int theta = L.num_positive() - 1;
  const Actors g = all_basis_actors(L);
  std::vector<int> borel, u;
  for (int i = 0; i < L.dim(); ++i)
    if (!L.is_negative(i)) borel.push_back(i);
  for (int i = 0; i < L.dim(); ++i)
    if (L.is_positive(i)) u.push_back(i);
  const Actors b = basis_actors(L, borel);
  const Subspace xt = grade_one({L.unit(L.pos_index(theta))});
  const Subspace xmt = grade_one({L.unit(L.neg_index(theta))});
  const Subspace gg = full_space(L, 1);
  std::vector<WedgeInstance> out;
  out.push_back({"x_theta^g under g", xt, gg, g});
  out.push_back({"x_-theta^x_theta under b", xmt, xt, b});
  out.push_back({"zero W' under g", xt, Subspace(1), g});
  out.push_back({"u^x_theta under b", grade_one(units(L, u)), xt, b});
  out.push_back({"x_-theta^x_theta^g under g", wedge_span(xmt, xt), gg, g});
  if (L.rank() >= 2) {
    const ParabolicData pd = build_parabolic(L, complement_of(L.root_system(), 0));
    out.push_back({"p_-u^p_u under p_u", grade_one(units(L, pd.p_minus_u)), grade_one(units(L, pd.p_u)),
                   basis_actors(L, pd.p_u)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Root-system level checks

namespace {

struct Split {
  long n = 0, n1 = 0, n2 = 0, d = 0;
  int components = 0;
};

Split split_at(const RootSystem& rs, int beta) {
  const SimpleSet X = complement_of(rs, beta);
  const auto comps = connected_components(rs, X);
  Split s;
  s.n = long(rs.num_positive());
  s.d = s.n - long(root_subsystem(rs, X).size());
  s.components = int(comps.size());
  if (!comps.empty()) s.n1 = long(root_subsystem(rs, comps[0]).size());
  if (comps.size() > 1) s.n2 = long(root_subsystem(rs, comps[1]).size());
  return s;
}

struct PrintedCheck {
  std::string formula;
  bool agrees = true;
  bool signs_agree = true;
  Json first;
};

void compare(PrintedCheck& c, int l, int s, const Rational& printed, const Rational& actual) {
  if (printed == actual) return;
  if (c.agrees) c.first = Json{{"rank", l}, {"s", s}, {"printed", to_short(printed)}, {"recomputed", to_short(actual)}};
  c.agrees = false;
  if (sgn(printed) != sgn(actual)) c.signs_agree = false;
}

std::vector<CaseReport> classical_appendix(char t, int max_rank) {
  std::vector<CaseReport> out;
  CaseReport r = timed([&] {
    CaseReport r = start("prs", nullptr);
    r.params["type"] = std::string(1, t);
    r.params["max_rank"] = max_rank;
    return r;
  });
  const auto t0 = std::chrono::steady_clock::now();
  const int lo = (t == 'D') ? 4 : 3;
  const int thr = (t == 'A') ? 6 : (t == 'D') ? 8 : 7;
  std::vector<PrintedCheck> printed;
  for (const char* f : {"n1", "n2", "n-2d-n1", "n-2d-n2", "s-bound"}) printed.push_back(PrintedCheck{f, true, true, Json()});
  if (t == 'D') printed.push_back(PrintedCheck{"d at beta_{l-2}", true, true, Json()});
  Json satisfiable = Json::array();
  long cases = 0;
  auto bad = [&](Json w) {
    if (r.outcome != Outcome::Fail) fail(r, std::move(w));
  };
  for (int l = lo; l <= max_rank; ++l) {
    const RootSystem rs = build_root_system(t, l);
    bool sat = false;
    if (t == 'D') {
      const Split sp = split_at(rs, l - 3);
      ++cases;
      const long dform = long(l) * (l - 1) - 2 - long(l - 3) * (l - 2) / 2;
      compare(printed[5], l, l - 3, Rational(dform), Rational(sp.d));
      if (sp.components != 3) bad(Json{{"rank", l}, {"beta", l - 2}, {"reason", "expected three components"}});
      if (!(2 * sp.d > sp.n)) bad(Json{{"rank", l}, {"beta", l - 2}, {"reason", "2d <= n"}});
      if (2 * sp.d + std::min(sp.n1, sp.n2) <= sp.n) sat = true;
    }
    const int smax = (t == 'D') ? l - 4 : l - 2;
    for (int s = 1; s <= smax; ++s) {
      ++cases;
      const AppendixRecord f = appendix_formulas(t, l, s);
      const Split e = split_at(rs, s);
      if (e.components != 2 || f.n != e.n || f.n1 != e.n1 || f.n2_derivation != e.n2 || f.d != e.d)
        bad(Json{{"rank", l},
                 {"s", s},
                 {"reason", "closed forms disagree with enumeration"},
                 {"enumerated", Json{{"n", e.n}, {"n1", e.n1}, {"n2", e.n2}, {"d", e.d}}},
                 {"closed_form", Json{{"n", f.n}, {"n1", f.n1}, {"n2", f.n2_derivation}, {"d", f.d}}}});
      compare(printed[0], l, s, Rational(f.n1), Rational(e.n1));
      compare(printed[1], l, s, Rational(f.n2), Rational(e.n2));
      compare(printed[2], l, s, f.gap1_printed, Rational(e.n - 2 * e.d - e.n1));
      compare(printed[3], l, s, f.gap2_printed, Rational(e.n - 2 * e.d - e.n2));
      if (2 * e.d + e.n1 <= e.n) {
        sat = true;
        satisfiable.push_back(Json::array({l, s}));
        if (l < thr) bad(Json{{"rank", l}, {"s", s}, {"reason", "2d + n1 <= n below the stated rank threshold"}});
        if (!(2 * e.d + e.n2 > e.n)) bad(Json{{"rank", l}, {"s", s}, {"reason", "2d + n1 <= n and 2d + n2 <= n"}});
        if (!satisfies_sqrt_bound(s, f.bound_a, f.bound_disc, f.bound_den))
          bad(Json{{"rank", l}, {"s", s}, {"reason", "s exceeds the root of n - 2d - n1"}});
        if (!satisfies_sqrt_bound(s, f.printed_a, f.printed_disc, f.printed_den)) {
          if (printed[4].agrees)
            printed[4].first = Json{{"rank", l}, {"s", s}, {"printed_bound_numerator", f.printed_a},
                                    {"printed_bound_disc", f.printed_disc}, {"printed_bound_den", f.printed_den}};
          printed[4].agrees = false;
        }
      }
    }
    if (l == thr && !sat) bad(Json{{"rank", l}, {"reason", "2d + n1 <= n is not attained at the stated threshold"}});
  }
  r.dims["cases"] = cases;
  r.dims["threshold"] = thr;
  r.dims["satisfiable"] = satisfiable;
  if (max_rank < lo) skip(r, "no rank in range");
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(r);

  for (const auto& c : printed) {
    CaseReport n = start("prs", nullptr);
    n.params["type"] = std::string(1, t);
    n.params["max_rank"] = max_rank;
    n.params["formula"] = c.formula;
    if (c.agrees) {
      n.outcome = Outcome::Pass;
    } else {
      n.outcome = Outcome::Note;
      n.witness = c.first;
      std::string text = "printed " + c.formula + " differs from the enumerated value";
      if (c.formula != "s-bound" && c.formula != "n1" && c.formula != "n2" && c.formula != "d at beta_{l-2}")
        text += c.signs_agree ? "; signs agree in every case" : "; signs differ in some case";
      n.note = text;
    }
    out.push_back(n);
  }
  return out;
}

struct ExceptionalTable {
  char type;
  int rank;
  long n;
  std::vector<long> dim_l;
  std::vector<long> two_d;
};

const std::vector<ExceptionalTable>& exceptional_tables() {
  static const std::vector<ExceptionalTable> t = {
      {'G', 2, 6, {4}, {10}},
      {'F', 4, 24, {12, 22}, {40, 30}},
      {'E', 6, 36, {20, 28, 36, 46}, {58, 50, 42, 32}},
      {'E', 7, 63, {27, 33, 39, 49, 67, 79}, {106, 100, 94, 84, 66, 54}},
      {'E', 8, 120, {36, 40, 52, 54, 64, 82, 92, 134}, {212, 208, 196, 194, 184, 166, 156, 114}},
  };
  return t;
}

CaseReport exceptional_case(const ExceptionalTable& tab) {
  return timed([&] {
    CaseReport r = start("rs4-tables", nullptr);
    r.params["type"] = std::string(1, tab.type);
    r.params["rank"] = tab.rank;
    const RootSystem rs = build_root_system(tab.type, tab.rank);
    const long n = long(rs.num_positive());
    const long dimg = 2 * n + tab.rank;
    std::set<long> dl, td;
    Json per_beta = Json::array();
    for (int b = 0; b < tab.rank; ++b) {
      const SimpleSet X = complement_of(rs, b);
      const long nx = long(root_subsystem(rs, X).size());
      const long dim_l = tab.rank + 2 * nx;
      const long two_d = dimg - dim_l;
      const bool connected = connected_components(rs, X).size() == 1;
      dl.insert(dim_l);
      td.insert(two_d);
      per_beta.push_back(Json{{"beta", b + 1}, {"dim_l", dim_l}, {"two_d", two_d}, {"X_connected", connected}});
      if (two_d <= n && !connected && r.outcome != Outcome::Fail)
        fail(r, Json{{"beta", b + 1}, {"reason", "2d <= n with X not connected"}});
    }
    r.dims["n"] = n;
    r.dims["per_beta"] = per_beta;
    if (n != tab.n && r.outcome != Outcome::Fail) fail(r, Json{{"reason", "n differs"}, {"n", n}});
    const std::set<long> want_l(tab.dim_l.begin(), tab.dim_l.end()), want_d(tab.two_d.begin(), tab.two_d.end());
    if ((dl != want_l || td != want_d) && r.outcome != Outcome::Fail)
      fail(r, Json{{"reason", "dimension sets differ from the table"},
                   {"dim_l", std::vector<long>(dl.begin(), dl.end())},
                   {"two_d", std::vector<long>(td.begin(), td.end())}});
    for (std::size_t i = 0; i < tab.dim_l.size() && r.outcome != Outcome::Fail; ++i)
      if (tab.dim_l[i] + tab.two_d[i] != dimg)
        fail(r, Json{{"reason", "table pair does not add up to dim g"}, {"dim_l", tab.dim_l[i]}, {"two_d", tab.two_d[i]}});
    return r;
  });
}

} // namespace

std::vector<CaseReport> verify_appendix(const std::string& types, int max_rank) {
  std::vector<CaseReport> out;
  if (max_rank < 1) throw ConfigError("max rank must be positive");
  if (max_rank > 12) throw ConfigError("closed-form audits are capped at rank 12");
  for (char t : types) {
    if (t == 'A' || t == 'B' || t == 'C' || t == 'D') {
      auto part = classical_appendix(t, max_rank);
      out.insert(out.end(), part.begin(), part.end());
    } else if (t == 'E' || t == 'F' || t == 'G') {
      for (const auto& tab : exceptional_tables())
        if (tab.type == t) out.push_back(exceptional_case(tab));
    } else {
      throw ConfigError(std::string("unknown type letter '") + t + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::string> algebra_axiom_violation(const LieAlgebra& L) {
  const int d = L.dim();
  std::vector<GVector> e(d);
  for (int i = 0; i < d; ++i) e[i] = L.unit(i);
  auto br = [&](int i, int j) { return to_dense(L, L.bracket_basis(i, j)); };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SparseG a = L.bracket_basis(i, j), b = L.bracket_basis(j, i);
      for (auto& t : b) t.coeff = -t.coeff;
      if (a != b) return "antisymmetry fails for (" + L.label(i) + ", " + L.label(j) + ")";
    }
  for (int r = 0; r < L.num_positive(); ++r)
    if (L.killing_basis(L.pos_index(r), L.neg_index(r)) != 1)
      return "kappa(x_alpha, x_-alpha) != 1 for " + L.label(L.pos_index(r));
  std::vector<std::vector<GVector>> table(d, std::vector<GVector>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) table[i][j] = br(i, j);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        GVector s = bracket(L, e[i], table[j][k]);
        const GVector b = bracket(L, e[j], table[k][i]);
        const GVector c = bracket(L, e[k], table[i][j]);
        for (int m = 0; m < d; ++m)
          if (s[m] + b[m] + c[m] != 0)
            return "Jacobi fails for (" + L.label(i) + ", " + L.label(j) + ", " + L.label(k) + ")";
        if (killing(L, table[i][j], e[k]) + killing(L, e[j], table[i][k]) != 0)
          return "invariance fails for (" + L.label(i) + ", " + L.label(j) + ", " + L.label(k) + ")";
      }
  return std::nullopt;
}

std::size_t gram_rank(const LieAlgebra& L, int k) {
  require_mask_width(L);
  Echelon<WedgeIndex, WedgeLess> m;
  for (WedgeIndex w : all_wedges(L.dim(), k)) m.insert(gram_functional(L, make_vector(k, {{w, Rational(1)}})).terms);
  return m.size();
}

// ---------------------------------------------------------------------------

std::vector<SimpleSet> nonempty_subsets(int rank) {
  std::vector<SimpleSet> out;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    SimpleSet X;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) X.push_back(i);
    out.push_back(X);
  }
  std::sort(out.begin(), out.end(), [](const SimpleSet& a, const SimpleSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

const LieAlgebra& algebra_for(char type_label, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<LieAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{type_label, rank}];
  if (!slot) slot = std::make_unique<LieAlgebra>(load_or_build_algebra(type_label, rank));
  return *slot;
}

std::vector<CaseReport> run_jobs(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<CaseReport>> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, int(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CaseReport> flat;
  for (auto& part : out)
    for (auto& c : part) flat.push_back(std::move(c));
  return flat;
}

namespace {

struct GridEntry {
  char type;
  int rank;
};

const std::vector<GridEntry>& theorem_grid() {
  static const std::vector<GridEntry> g = {{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}};
  return g;
}
const std::vector<GridEntry>& deep_grid() {
  static const std::vector<GridEntry> g = {{'B', 3}, {'C', 3}};
  return g;
}
const std::vector<GridEntry>& rank_two() {
  static const std::vector<GridEntry> g = {{'A', 2}, {'B', 2}, {'G', 2}};
  return g;
}

VerifyLimits limits_for(const SuiteOptions& opt) {
  VerifyLimits lim;
  lim.max_ambient = opt.deep ? kDeepAmbient : kDefaultAmbient;
  return lim;
}

CaseReport hardest_case_record() {
  CaseReport r = start("theorem-tint", nullptr);
  r.params["type"] = "A";
  r.params["rank"] = 6;
  r.params["X"] = Json::array({1, 3, 4, 5, 6});
  r.params["k"] = 21;
  r.dims["ambient"] = binomial(48, 21);
  r.outcome = Outcome::Skipped;
  r.note = "first rank where 2d + n1 <= k <= n is possible; C(48, 21) is far beyond exact closure";
  return r;
}

} // namespace

Json suite_config(const SuiteOptions& opt) {
  const VerifyLimits lim = limits_for(opt);
  Json grid = Json::array();
  for (const auto& e : theorem_grid()) grid.push_back(std::string(1, e.type) + std::to_string(e.rank));
  if (opt.deep)
    for (const auto& e : deep_grid()) grid.push_back(std::string(1, e.type) + std::to_string(e.rank));
  return Json{{"command", "suite"},
              {"deep", opt.deep},
              {"max_ambient", lim.max_ambient},
              {"max_exterior_rank", lim.max_exterior_rank},
              {"theorem_grid", grid},
              {"appendix_max_rank", 12}};
}

std::vector<CaseReport> run_suite(const SuiteOptions& opt) {
  const VerifyLimits lim = limits_for(opt);
  std::vector<Task> tasks;

  auto theorem_types = theorem_grid();
  if (opt.deep)
    for (const auto& e : deep_grid()) theorem_types.push_back(e);
  for (const auto& e : theorem_types) {
    const LieAlgebra* L = &algebra_for(e.type, e.rank);
    for (const auto& X : nonempty_subsets(e.rank))
      for (int k = 1; k <= L->num_positive(); ++k)
        tasks.push_back(one([L, X, k, lim] { return verify_theorem(*L, X, k, lim); }));
  }
  std::vector<GridEntry> ortho = rank_two();
  ortho.push_back({'A', 3});
  for (const auto& e : ortho) {
    const LieAlgebra* L = &algebra_for(e.type, e.rank);
    const int kmax = e.rank == 2 ? 4 : 2;
    const int kmin = e.rank == 2 ? 1 : 2;
    for (int b = 0; b < e.rank; ++b) {
      const SimpleSet X = complement_of(L->root_system(), b);
      for (int k = kmin; k <= kmax; ++k)
        for (const char* gr : {"n3", "n5", "n10"})
          tasks.push_back(one([L, X, k, gr, lim] { return verify_orthogonality(*L, X, k, gr, lim); }));
    }
  }
  for (const auto& e : rank_two()) {
    const LieAlgebra* L = &algebra_for(e.type, e.rank);
    for (int b = 0; b < e.rank; ++b) {
      const SimpleSet X = complement_of(L->root_system(), b);
      const int d = build_parabolic(*L, X).d;
      for (int k = 1; k <= d; ++k) tasks.push_back(one([L, X, k, lim] { return verify_c2oc2(*L, X, k, lim); }));
    }
  }
  for (const auto& e : std::vector<GridEntry>{{'A', 2}, {'B', 2}}) {
    const LieAlgebra* L = &algebra_for(e.type, e.rank);
    for (int b = 0; b < e.rank; ++b) {
      const int d = build_parabolic(*L, complement_of(L->root_system(), b)).d;
      for (int k = 1; k <= d; ++k) {
        tasks.push_back([L, b, k, lim] { return verify_invariant_subspaces(*L, b, k, lim); });
        tasks.push_back(one([L, b, k, lim] { return verify_pau2(*L, b, k, lim); }));
      }
    }
    auto instances = std::make_shared<std::vector<WedgeInstance>>(wedge_lemma_instances(*L));
    for (std::size_t i = 0; i < instances->size(); ++i)
      tasks.push_back(one([L, instances, i] { return verify_wedge_lemma(*L, (*instances)[i]); }));
  }
  tasks.push_back(one([] { return hardest_case_record(); }));

  std::vector<CaseReport> out = run_jobs(tasks, opt.jobs);
  auto app = verify_appendix("ABCDEFG", 12);
  out.insert(out.end(), app.begin(), app.end());
  return out;
}

} // namespace lambdag
