#include <json.hpp>

#include "spexkm/format.hpp"
#include "spexkm/oracle.hpp"

namespace spexkm {

std::string search_report_json(const SearchReport& report) {
  nlohmann::json doc;
  doc["n"] = report.n;
  if (report.k > 0) {
    doc["k"] = report.k;
    doc["family"] = "K_" + std::to_string(report.k + 1) + ",M_" + std::to_string(report.s + 1);
  } else {
    doc["k"] = nullptr;
    doc["family"] = "M_" + std::to_string(report.s + 1);
  }
  doc["s"] = report.s;
  doc["objective"] = objective_name(report.objective);
  if (report.objective == Objective::Edges)
    doc["best_value"] = static_cast<long long>(report.best_value);
  else
    doc["best_value"] = round_significant(report.best_value);
  doc["witnesses"] = report.witnesses;
  doc["examined"] = report.examined;
  doc["elapsed"] = round_significant(report.elapsed, 4);
  if (!report.warnings.empty()) doc["warnings"] = report.warnings;
  return doc.dump();
}

}  // namespace spexkm
