#include "lambdag/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace lambdag {

std::string to_string(Outcome o) {
  switch (o) {
  case Outcome::Pass: return "pass";
  case Outcome::Fail: return "fail";
  case Outcome::Skipped: return "skipped";
  case Outcome::Note: return "note";
  }
  return "fail";
}

namespace {

const std::vector<std::pair<std::string, std::string>>& anchors() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"theorem-tint", "Theorem tint"},   {"coc2", "Corollary coc2"},     {"c2oc2", "Corollary c2oc2"},
      {"cau1", "Corollary cau1"},         {"cau2", "Corollary cau2"},     {"lau1", "Lemma lau1"},
      {"pau2", "Proposition pau2"},       {"loc2", "Lemma loc2"},         {"prs", "Proposition prs"},
      {"rs4-tables", "Section rs4"},      {"lint", "Lemma lint"},
  };
  return table;
}

std::string render_param(const Json& v) {
  if (v.is_number_integer()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%08lld", static_cast<long long>(v.get<long long>()));
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (const auto& e : v) s += render_param(e) + ",";
    return s + "]";
  }
  return v.dump();
}

} // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, a] : anchors()) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string anchor_for(const std::string& statement) {
  for (const auto& [id, a] : anchors())
    if (id == statement) return a;
  throw std::invalid_argument("unknown statement id '" + statement + "'");
}

std::string CaseReport::sort_key() const {
  const auto& ids = statement_ids();
  const std::size_t pos = std::size_t(std::find(ids.begin(), ids.end(), statement) - ids.begin());
  char head[8];
  std::snprintf(head, sizeof head, "%02zu|", pos);
  std::string key = head;
  for (auto it = params.begin(); it != params.end(); ++it) key += it.key() + "=" + render_param(*it) + "|";
  return key;
}

Json case_to_json(const CaseReport& c) {
  Json j;
  j["statement"] = c.statement;
  j["paper_anchor"] = c.paper_anchor;
  j["params"] = c.params;
  j["outcome"] = to_string(c.outcome);
  j["dims"] = c.dims;
  if (c.witness) j["witness"] = *c.witness;
  if (c.note) j["note"] = *c.note;
  j["elapsed_ms"] = std::round(c.elapsed_ms * 1000.0) / 1000.0;
  return j;
}

Json report_json(const Json& config, std::vector<CaseReport> cases) {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const CaseReport& a, const CaseReport& b) { return a.sort_key() < b.sort_key(); });
  Json j;
  j["version"] = kReportVersion;
  j["config"] = config;
  j["cases"] = Json::array();
  for (const auto& c : cases) j["cases"].push_back(case_to_json(c));
  return j;
}

int exit_code(const std::vector<CaseReport>& cases) {
  for (const auto& c : cases)
    if (c.outcome == Outcome::Fail) return 1;
  return 0;
}

Json vector_json(const LieAlgebra& L, const ExteriorVector& v) {
  Json terms = Json::array();
  for (const auto& [w, c] : v.terms) {
    Json factors = Json::array();
    for (int i : wedge_indices(w)) factors.push_back(L.label(i));
    terms.push_back(Json{{"wedge", factors}, {"coeff", to_short(c)}});
  }
  return Json{{"grade", v.grade}, {"terms", terms}};
}

ExteriorVector vector_from_json(const LieAlgebra& L, const Json& j) {
  std::map<std::string, int> index;
  for (int m = 0; m < L.dim(); ++m) index[L.label(m)] = m;
  ExteriorVector v = make_vector(j.at("grade").get<int>(), {});
  for (const auto& t : j.at("terms")) {
    std::vector<int> f;
    for (const auto& s : t.at("wedge")) {
      auto it = index.find(s.get<std::string>());
      if (it == index.end()) throw std::invalid_argument("unknown basis label '" + s.get<std::string>() + "'");
      f.push_back(it->second);
    }
    Rational c;
    if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
    c.canonicalize();
    v = v + monomial(f, c);
  }
  return v;
}

Json simple_set_json(const SimpleSet& X) {
  Json a = Json::array();
  for (int i : X) a.push_back(i + 1);
  return a;
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["name"] = rs.name();
  j["type"] = std::string(1, rs.type_label());
  j["rank"] = rs.rank();
  j["num_positive"] = rs.num_positive();
  j["dim_g"] = 2 * rs.num_positive() + rs.rank();
  j["cartan"] = rs.cartan();
  j["positive_roots"] = rs.positive_roots();
  j["highest_root"] = rs.highest_root();
  j["form"] = rs.form();
  return j;
}

Json strip_elapsed(Json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto it = j.begin(); it != j.end(); ++it) *it = strip_elapsed(*it);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_elapsed(v);
  }
  return j;
}

} // namespace lambdag
