#include <sstream>
#include <stdexcept>

#include "hgs/report.hpp"

namespace hgs {

using nlohmann::json;

namespace {

json to_json(const TaskReport& t) {
  json j;
  j["name"] = t.name;
  j["task"] = t.task;
  j["verdict"] = t.verdict;
  j["exit_code"] = t.exit_code;
  j["input_hash"] = t.input_hash;
  j["checks"] = json::array();
  for (const auto& c : t.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["tables"] = json::array();
  for (const auto& tb : t.tables)
    j["tables"].push_back({{"side", tb.side},
                           {"algebra", tb.algebra},
                           {"algebra_hash", tb.algebra_hash},
                           {"field", tb.field},
                           {"coefficients", tb.coefficients},
                           {"dims", tb.dims}});
  j["relations"] = json::array();
  for (const auto& r : t.relations)
    j["relations"].push_back(
        {{"map", r.map}, {"relation", r.relation}, {"image", r.image}, {"residue", r.residue}, {"pass", r.pass}});
  j["notes"] = t.notes;
  if (t.elapsed_ms) j["elapsed_ms"] = *t.elapsed_ms;
  return j;
}

TaskReport task_from_json(const json& j) {
  TaskReport t;
  t.name = j.at("name").get<std::string>();
  t.task = j.at("task");
  t.verdict = j.at("verdict").get<std::string>();
  t.exit_code = j.at("exit_code").get<int>();
  t.input_hash = j.at("input_hash").get<std::string>();
  for (const auto& c : j.at("checks"))
    t.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("witness").get<std::string>()});
  for (const auto& tb : j.at("tables"))
    t.tables.push_back({tb.at("side").get<std::string>(), tb.at("algebra").get<std::string>(),
                        tb.at("algebra_hash").get<std::string>(), tb.at("field").get<std::string>(),
                        tb.at("coefficients").get<std::string>(), tb.at("dims").get<std::vector<std::size_t>>()});
  for (const auto& r : j.at("relations"))
    t.relations.push_back({r.at("map").get<std::string>(), r.at("relation").get<std::string>(),
                           r.at("image").get<std::string>(), r.at("residue").get<std::string>(),
                           r.at("pass").get<bool>()});
  t.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("elapsed_ms")) t.elapsed_ms = j.at("elapsed_ms").get<double>();
  return t;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string emit_text(const Report& r) {
  std::ostringstream o;
  o << "hopfgs " << r.tool_version << "\n";
  for (const auto& t : r.tasks) {
    o << "\n[" << t.name << "] " << t.verdict << "\n";
    for (const auto& tb : t.tables)
      o << "  " << tb.side << "  " << tb.algebra << " / " << tb.coefficients << " over " << tb.field << ": "
        << join(tb.dims) << "\n";
    for (const auto& c : t.checks) {
      o << "  " << (c.pass ? "ok    " : "FAIL  ") << c.name;
      if (!c.witness.empty()) o << "  (" << c.witness << ")";
      o << "\n";
    }
    std::size_t bad = 0;
    for (const auto& rel : t.relations)
      if (!rel.pass) {
        ++bad;
        o << "  relation " << rel.map << ": " << rel.relation << " -> " << rel.residue << "\n";
      }
    if (!t.relations.empty()) o << "  relations: " << t.relations.size() - bad << "/" << t.relations.size() << " reduce to 0\n";
    for (const auto& n : t.notes) o << "  " << n << "\n";
    if (t.elapsed_ms) o << "  elapsed " << *t.elapsed_ms << " ms\n";
  }
  if (r.tasks.empty()) o << "no tasks\n";
  return o.str();
}

std::string emit_csv(const Report& r) {
  std::ostringstream o;
  o << "task,side,degree,dim\n";
  for (const auto& t : r.tasks)
    for (const auto& tb : t.tables)
      for (std::size_t d = 0; d < tb.dims.size(); ++d)
        o << csv_field(t.name) << "," << csv_field(tb.side) << "," << d << "," << tb.dims[d] << "\n";
  return o.str();
}

}  // namespace

bool operator==(const TaskReport& a, const TaskReport& b) {
  if (a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.checks.size(); ++i)
    if (a.checks[i].name != b.checks[i].name || a.checks[i].pass != b.checks[i].pass ||
        a.checks[i].witness != b.checks[i].witness)
      return false;
  return a.name == b.name && a.task == b.task && a.verdict == b.verdict && a.exit_code == b.exit_code &&
         a.tables == b.tables && a.relations == b.relations && a.notes == b.notes && a.input_hash == b.input_hash &&
         a.elapsed_ms == b.elapsed_ms;
}

int Report::exit_code() const {
  int worst = 0;
  auto rank = [](int c) { return c == 2 ? 3 : c == 3 ? 2 : c == 1 ? 1 : 0; };
  for (const auto& t : tasks)
    if (rank(t.exit_code) > rank(worst)) worst = t.exit_code;
  return worst;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "text") return ReportFormat::text;
  if (s == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown format " + s + " (json, text, csv)");
}

std::string emit_report(const Report& r, ReportFormat f) {
  switch (f) {
    case ReportFormat::text:
      return emit_text(r);
    case ReportFormat::csv:
      return emit_csv(r);
    case ReportFormat::json:
      break;
  }
  json j;
  j["tool_version"] = r.tool_version;
  j["exit_code"] = r.exit_code();
  j["tasks"] = json::array();
  for (const auto& t : r.tasks) j["tasks"].push_back(to_json(t));
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& t : j.at("tasks")) r.tasks.push_back(task_from_json(t));
  return r;
}

}  // namespace hgs
