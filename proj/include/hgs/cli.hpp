#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgs/report.hpp"

namespace hgs::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes.
inline constexpr int kPass = 0, kCheckFailed = 1, kInputError = 2, kCeiling = 3;

struct TaskConfig {
  std::string kind;  // hopf-check, yd-check, gs-compute, verify-corollary, ...
  std::string fixture;
  std::string coeff = "trivial";
  std::size_t max_degree = 4;
  std::optional<std::size_t> cap;
  std::string matrix, matrix_file;
  std::string field = "Q";
  std::string family;  // bilinear or cosovereign, for presented hopf-check
  std::string t;       // genericity invariant, a rational
  std::uint64_t seed = 1;
  std::size_t rank_ceiling = 4096;
  std::size_t max_rules = 20000;
  /// Not serialized. Relative matrix files resolve against it (the config
  /// file's directory for `run`).
  std::string base_dir;
};

/// Unknown keys and wrong types are errors (std::invalid_argument).
TaskConfig task_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TaskConfig& c);
/// Reads {"tasks": [...]} or a bare array.
std::vector<TaskConfig> tasks_from_config_text(const std::string& text);

/// Never throws; failures are recorded with their exit code.
TaskReport run_task(const TaskConfig& c, bool timing = false);
Report run_tasks(const std::vector<TaskConfig>& tasks, bool timing = false);

/// argv without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgs::cli
