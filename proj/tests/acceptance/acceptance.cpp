// Acceptance run: one line per criterion.
//
// Criteria 6 and 7 fail on a fixed set of cases (see known_counterexamples).
// Those are real: the missing vectors are re-checked from the report and the
// A2 case is confirmed by a weight count in test_verify.cpp. By default the
// exit code is 0 when the failures are exactly that set and 1 otherwise;
// --strict turns every FAIL into exit code 1.
#include "lambdag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace lambdag;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
  bool documented = false;
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string case_tag(const CaseReport& r) {
  std::ostringstream s;
  s << r.params.value("type", "?") << r.params.value("rank", 0) << " b" << r.params.value("beta", 0) << " k"
    << r.params.value("k", 0);
  return s.str();
}

// statement -> failing cases, as printed by case_tag
const std::map<std::string, std::set<std::string>>& known_counterexamples() {
  static const std::map<std::string, std::set<std::string>> m = {
      {"cau2", {"A2 b1 k2", "A2 b2 k2", "B2 b1 k2", "B2 b1 k3", "B2 b2 k3"}},
      {"pau2", {"A2 b1 k2", "A2 b2 k2", "B2 b1 k2", "B2 b1 k3", "B2 b2 k3"}},
  };
  return m;
}

std::vector<CaseReport> with_statement(const std::vector<CaseReport>& all, std::initializer_list<const char*> ids) {
  std::vector<CaseReport> out;
  for (const auto& r : all)
    for (const char* id : ids)
      if (r.statement == id) out.push_back(r);
  return out;
}

bool on_grid(const CaseReport& r, const std::set<std::string>& grid) {
  return grid.count(r.params.value("type", "") + std::to_string(r.params.value("rank", 0))) > 0;
}

// counts, failures, and whether every record is in an allowed outcome
struct Tally {
  std::size_t total = 0, pass = 0, note = 0;
  std::vector<const CaseReport*> failed, skipped;
};

Tally tally(const std::vector<CaseReport>& rs) {
  Tally t;
  for (const auto& r : rs) {
    ++t.total;
    switch (r.outcome) {
    case Outcome::Pass: ++t.pass; break;
    case Outcome::Note: ++t.note; break;
    case Outcome::Fail: t.failed.push_back(&r); break;
    case Outcome::Skipped: t.skipped.push_back(&r); break;
    }
  }
  return t;
}

std::string counts(const Tally& t, std::size_t expected) {
  std::ostringstream s;
  s << t.pass << "/" << expected << " pass";
  if (t.total != expected) s << ", " << t.total << " records";
  if (!t.skipped.empty()) s << ", " << t.skipped.size() << " skipped";
  if (t.note) s << ", " << t.note << " note";
  return s.str();
}

Line criterion_axioms() {
  const auto t0 = Clock::now();
  std::string bad;
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}})
    if (auto v = algebra_axiom_violation(algebra_for(t, l)))
      bad += std::string(1, t) + std::to_string(l) + ": " + *v + "; ";
  return {1, "algebra axioms on A2 B2 G2 A3", bad.empty(), bad.empty() ? "exact on all basis tuples" : bad,
          since(t0)};
}

Line criterion_gram() {
  const auto t0 = Clock::now();
  std::string bad;
  int done = 0;
  for (auto [t, l, kmax] : std::vector<std::tuple<char, int, int>>{{'A', 2, 8}, {'B', 2, 4}, {'G', 2, 6}, {'A', 3, 6}}) {
    const LieAlgebra& L = algebra_for(t, l);
    for (int k = 1; k <= kmax; ++k, ++done) {
      const std::size_t r = gram_rank(L, k);
      if (r != binomial(L.dim(), k))
        bad += std::string(1, t) + std::to_string(l) + " k" + std::to_string(k) + " rank " + std::to_string(r) + "; ";
    }
  }
  return {2, "Gram matrix of Lambda^k g has full rank", bad.empty(),
          bad.empty() ? std::to_string(done) + " (type, k) pairs" : bad, since(t0)};
}

Line criterion_from(int id, const std::string& name, const std::vector<CaseReport>& rs, std::size_t expected,
                    bool notes_ok = false) {
  const Tally t = tally(rs);
  bool ok = t.failed.empty() && t.skipped.empty() && t.total == expected && (notes_ok || t.note == 0);
  std::string detail = counts(t, expected);
  const auto known = known_counterexamples();
  std::map<std::string, std::set<std::string>> seen;
  for (const auto* f : t.failed) seen[f->statement].insert(case_tag(*f));
  bool documented = !t.failed.empty() && t.skipped.empty() && t.total == expected;
  for (const auto& [st, tags] : seen) {
    detail += "; " + st + " fails at";
    for (const auto& g : tags) detail += " [" + g + "]";
    auto it = known.find(st);
    if (it == known.end() || it->second != tags) documented = false;
  }
  // every documented statement must fail exactly as recorded
  for (const auto& r : rs)
    if (known.count(r.statement) && !seen.count(r.statement)) documented = false;
  Line l{id, name, ok, detail, 0.0};
  l.documented = !ok && documented;
  return l;
}

// A failing cau2/pau2 record names a vector outside V_{k,u}; rebuild it from
// the JSON and test membership again from scratch.
std::string recheck_witnesses(const std::vector<CaseReport>& rs) {
  std::string bad;
  int checked = 0;
  for (const auto& r : rs) {
    if (r.outcome != Outcome::Fail) continue;
    const bool vku_target = r.statement == "cau2" ||
                            (r.statement == "pau2" && (*r.witness)["module"] == "scalars" && (*r.witness)["half"] == "i");
    if (!vku_target) continue;
    const LieAlgebra& L = algebra_for(r.params["type"].get<std::string>()[0], r.params["rank"].get<int>());
    const int beta = r.params["beta"].get<int>() - 1, k = r.params["k"].get<int>();
    const ParabolicData pd = build_parabolic(L, complement_of(L.root_system(), beta));
    const Subspace V = closure(L, exterior_power(units(L, pd.p_minus_u), k), basis_actors(L, pd.p_u));
    const ExteriorVector w = vector_from_json(L, (*r.witness)["vector"]);
    ++checked;
    if (V.contains(w)) bad += r.statement + " " + case_tag(r) + " witness lies in V_{k,u}; ";
  }
  if (bad.empty()) return "witnesses re-checked: " + std::to_string(checked);
  return bad;
}

} // namespace

int main(int argc, char** argv) {
  bool strict = false;
  int jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--strict")) {
      strict = true;
    } else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) {
      jobs = std::max(1, std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--strict] [--jobs N]\n";
      return 2;
    }
  }

  std::vector<Line> lines;
  try {
    lines.push_back(criterion_axioms());
    lines.push_back(criterion_gram());

    auto t0 = Clock::now();
    SuiteOptions opt;
    opt.jobs = jobs;
    const std::vector<CaseReport> first = run_suite(opt);
    const double suite_s = since(t0);

    const std::set<std::string> grid{"A1", "A2", "B2", "G2", "A3"}, rank2{"A2", "B2", "G2"};
    std::vector<CaseReport> theorem, ortho, c2;
    for (const auto& r : with_statement(first, {"theorem-tint"}))
      if (on_grid(r, grid)) theorem.push_back(r);
    for (const auto& r : with_statement(first, {"loc2", "coc2"}))
      if (on_grid(r, rank2)) ortho.push_back(r);
    for (const auto& r : with_statement(first, {"c2oc2"}))
      if (on_grid(r, rank2)) c2.push_back(r);

    // A1: 1, A2: 3*3, B2: 3*4, G2: 3*6, A3: 7*6
    lines.push_back(criterion_from(3, "closure(V_{k,p}, g) = Lambda^k g on A1 A2 B2 G2 A3", theorem, 82));
    // d = 2,2 / 3,3 / 5,5
    lines.push_back(criterion_from(4, "c2oc2 subspace identities on A2 B2 G2", c2, 20));
    // 3 types * 2 maximal X * k = 1..4 * 3 gradings
    lines.push_back(criterion_from(5, "i*-orthogonality of graded pieces, rank 2, k <= 4", ortho, 72));

    const auto chain = with_statement(first, {"cau1", "lau1", "cau2"});
    Line six = criterion_from(6, "cau1 / lau1 / cau2 chain on A2 B2", chain, 30);
    six.detail += "; " + recheck_witnesses(chain);
    lines.push_back(six);
    const auto pau2 = with_statement(first, {"pau2"});
    Line seven = criterion_from(7, "pau2 instances on A2 B2", pau2, 10);
    seven.detail += "; " + recheck_witnesses(pau2);
    lines.push_back(seven);

    // 4 main records plus the printed-formula records, which may be notes
    const auto prs = with_statement(first, {"prs"});
    Line eight = criterion_from(8, "closed forms, thresholds 6/7/7/8, exclusivity, D at beta_{l-2}", prs, prs.size(), true);
    int main_pass = 0;
    for (const auto& r : prs)
      if (!r.params.contains("formula") && r.outcome == Outcome::Pass) ++main_pass;
    if (main_pass != 4) {
      eight.pass = false;
      eight.detail += "; main A/B/C/D records passing: " + std::to_string(main_pass);
    }
    lines.push_back(eight);
    lines.push_back(criterion_from(9, "exceptional dim l and 2d tables for G2 F4 E6 E7 E8",
                                   with_statement(first, {"rs4-tables"}), 5));

    t0 = Clock::now();
    const Json a = strip_elapsed(report_json(suite_config(opt), first));
    const Json b = strip_elapsed(report_json(suite_config(opt), run_suite(opt)));
    const bool same = a.dump() == b.dump();
    lines.push_back({10, "two suite runs give identical reports without elapsed_ms", same,
                     same ? std::to_string(a["cases"].size()) + " cases" : "reports differ", since(t0) + suite_s});
    // suite time is shared by 3..9
    for (auto& l : lines)
      if (l.id >= 3 && l.id <= 9) l.seconds = 0.0;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }

  int failed = 0, undocumented = 0;
  for (const auto& l : lines) {
    std::printf("%s %2d. %s: %s%s", l.pass ? "PASS" : "FAIL", l.id, l.name.c_str(), l.detail.c_str(),
                l.documented ? " [documented counterexample]" : "");
    if (l.seconds > 0) std::printf(" (%.2f s)", l.seconds);
    std::printf("\n");
    if (!l.pass) {
      ++failed;
      if (!l.documented) ++undocumented;
    }
  }
  std::printf("%zu/%zu criteria pass", lines.size() - std::size_t(failed), lines.size());
  if (failed) std::printf(", %d fail on documented counterexamples, %d otherwise", failed - undocumented, undocumented);
  std::printf("\n");
  if (strict) return failed ? 1 : 0;
  return undocumented ? 1 : 0;
}
