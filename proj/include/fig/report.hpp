#pragma once

/**
 * @file report.hpp
 * @brief Invariant reports of a single module, as JSON and as an aligned
 * text table. Every number carries a certification flag.
 */

#include "fig/invariants.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fig {

struct ReportOptions {
  std::vector<Invariant> invariants = all_invariants();
  int i_max = 3;
};

/// {"value": v, "certified": c}; infinite values are the strings "inf" and "-inf".
nlohmann::json certified_json(const ExtInt &v, bool certified);
nlohmann::json ext_json(const ExtInt &v);

/// Requested invariants that the truncation does not certify, with the
/// truncation each needs.
std::vector<std::pair<Invariant, int>> missing_windows(const Analysis &an, const ReportOptions &opts);

nlohmann::json analysis_report(const Analysis &an, const ReportOptions &opts);
nlohmann::json hilbert_report(const Analysis &an);
nlohmann::json filtration_report(const Analysis &an);

/// Aligned two-column rendering of any report produced above.
std::string text_report(const nlohmann::json &report);

} // namespace fig
