#pragma once

#include "lambdag/exterior.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lambdag {

using Json = nlohmann::ordered_json;

enum class Outcome { Pass, Fail, Skipped, Note };

std::string to_string(Outcome o);

/// Result of checking one instance of a statement.
struct CaseReport {
  std::string statement;    // e.g. "theorem-tint"
  std::string paper_anchor; // e.g. "Theorem tint"
  Json params = Json::object();
  Outcome outcome = Outcome::Pass;
  Json dims = Json::object();
  std::optional<Json> witness;
  std::optional<std::string> note;
  double elapsed_ms = 0;

  /// Deterministic ordering key (statement, type, rank, remaining params).
  std::string sort_key() const;
};

/// Anchor text reported for a statement id; throws std::invalid_argument on unknown ids.
std::string anchor_for(const std::string& statement);
const std::vector<std::string>& statement_ids();

Json case_to_json(const CaseReport& c);

/// {version, config, cases}, cases sorted by sort_key().
Json report_json(const Json& config, std::vector<CaseReport> cases);

/// 0 when nothing failed, 1 otherwise (skipped and note records do not count).
int exit_code(const std::vector<CaseReport>& cases);

/// Witness encodings.
Json vector_json(const LieAlgebra& L, const ExteriorVector& v);
/// Inverse of vector_json; throws std::invalid_argument on unknown labels.
ExteriorVector vector_from_json(const LieAlgebra& L, const Json& j);
Json simple_set_json(const SimpleSet& X); // 1-based

/// name, type, rank, counts, Cartan matrix, positive roots, highest root, form.
Json root_system_json(const RootSystem& rs);

/// Drops every "elapsed_ms" field, for comparing runs.
Json strip_elapsed(Json j);

constexpr const char* kReportVersion = "1";

} // namespace lambdag
