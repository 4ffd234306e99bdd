#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "toric/engine.hpp"

namespace toric {

/// "3" or "-2,3" -> DivisorClass. Throws ModelError.
DivisorClass parse_class(std::string_view text);
/// "-2..2,0..3" -> inclusive ranges; a bare integer is a one-point range.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_box(std::string_view text);

/// x1^2*x4/(x2*x3); "1" for the zero vector.
std::string format_rationom(const DegreeVector& u, const std::vector<std::string>& names);

enum class CheckStatus { kNotRun, kPass, kFail };

/// One output row of a batch run.
struct ReportRow {
  BatchEntry entry;
  CheckStatus oracle = CheckStatus::kNotRun;
  CheckStatus serre = CheckStatus::kNotRun;
  std::string check_note;
  /// degree -> explicit neg-group elements (only for small finite groups)
  std::vector<std::pair<VertexSet, std::vector<DegreeVector>>> rationoms;
};

/// {"alpha": [...], "h": [...], "breakdown": [{"degree": "0110", "count": 4 | "inf",
///   "factors": {"r": β}, "contrib": {"i": c}}]}
nlohmann::json result_to_json(const CohomologyResult& result, int vertex_count);
/// Row object: result_to_json plus "error", "oracle", "serre" when relevant.
nlohmann::json row_to_json(const ReportRow& row, int vertex_count);
/// Inverse of the "h" field (used to check the report round trip).
std::vector<BigInt> dims_from_json(const nlohmann::json& row);

std::string csv_header(const ToricVarietyModel& model);
std::string csv_row(const ReportRow& row);
/// "(-3): 0 0 1  [oracle PASS]" plus indented breakdown lines when verbose.
std::string table_row(const ReportRow& row, const ToricVarietyModel& model, bool verbose);

}  // namespace toric
