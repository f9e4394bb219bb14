#pragma once

// Batch reports. Emission is byte-stable: keys are sorted, checks keep their
// computation order, and timing is only written when asked for.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgs/algebra.hpp"

namespace hgs {

struct ReportTable {
  std::string side;  // "H", "lhs", "rhs", ...
  std::string algebra, algebra_hash, field, coefficients;
  std::vector<std::size_t> dims;
  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

struct ReportRelation {
  std::string map, relation, image, residue;
  bool pass = true;
  friend bool operator==(const ReportRelation&, const ReportRelation&) = default;
};

struct TaskReport {
  std::string name;
  nlohmann::json task;   // the task as given, normalized
  std::string verdict;   // pass, fail, refused, error
  int exit_code = 0;
  std::vector<CheckResult> checks;
  std::vector<ReportTable> tables;
  std::vector<ReportRelation> relations;
  std::vector<std::string> notes;
  std::string input_hash;
  std::optional<double> elapsed_ms;
  friend bool operator==(const TaskReport&, const TaskReport&);
};

struct Report {
  std::string tool_version;
  std::vector<TaskReport> tasks;
  /// 0 when empty; otherwise input errors beat ceilings beat failures
  int exit_code() const;
  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { json, text, csv };
ReportFormat parse_format(const std::string& s);

std::string emit_report(const Report& r, ReportFormat f);
/// Inverse of the JSON emission.
Report report_from_json(const std::string& text);

}  // namespace hgs
