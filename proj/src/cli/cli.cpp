#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hgs/cli.hpp"
#include "hgs/fixtures.hpp"

namespace hgs::cli {

using nlohmann::json;

namespace {

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// verdict and exit code of one task
struct Outcome {
  std::string verdict;
  int code;
};

Field task_field(const TaskConfig& c) { return Field::parse(c.field); }

std::string matrix_path(const TaskConfig& c) {
  std::filesystem::path p(c.matrix_file);
  if (c.base_dir.empty() || p.is_absolute()) return p.string();
  return (std::filesystem::path(c.base_dir) / p).string();
}

Matrix task_matrix(const TaskConfig& c) {
  Field f = task_field(c);
  if (!c.matrix.empty() && !c.matrix_file.empty()) throw std::invalid_argument("give matrix or matrix_file, not both");
  if (!c.matrix.empty()) return matrix_fixture(c.matrix, f);
  if (!c.matrix_file.empty()) return read_matrix_file(matrix_path(c), f);
  throw std::invalid_argument(c.kind + " needs a matrix");
}

CompletionOptions completion(const TaskConfig& c) {
  CompletionOptions o;
  o.max_rules = c.max_rules;
  return o;
}

ResolutionOptions resolution(const TaskConfig& c) {
  ResolutionOptions o;
  o.max_degree = c.max_degree;
  o.rank_ceiling = c.rank_ceiling;
  o.seed = c.seed;
  return o;
}

void need_fixture(const TaskConfig& c) {
  if (c.fixture.empty()) throw std::invalid_argument(c.kind + " needs a fixture");
}

// Algebra and optional tower for fixture names of either kind.
struct Subject {
  HopfPtr a;
  std::optional<TowerFixture> tower;
};

Subject subject(const TaskConfig& c) {
  need_fixture(c);
  if (is_tower_name(c.fixture)) {
    Subject s;
    s.tower = tower_fixture(c.fixture);
    s.a = s.tower->i.target;
    return s;
  }
  return {hopf_fixture(c.fixture), std::nullopt};
}

ReportTable table_of(const std::string& side, const CohomologyTable& t, const std::string& algebra) {
  return {side, algebra, t.algebra_hash, t.field, t.coefficients, t.dims};
}

void add_checks(TaskReport& r, const CheckReport& cr) {
  r.checks.insert(r.checks.end(), cr.checks.begin(), cr.checks.end());
}

void add_relations(TaskReport& r, const std::string& map, const std::vector<RelationCheck>& rels) {
  for (const auto& x : rels) r.relations.push_back({map, x.relation, x.image, x.residue, x.pass});
}

Outcome from_checks(const TaskReport& r) {
  bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.pass; }) &&
            std::all_of(r.relations.begin(), r.relations.end(), [](const ReportRelation& x) { return x.pass; });
  return ok ? Outcome{"pass", kPass} : Outcome{"fail", kCheckFailed};
}

std::string join_dims(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Outcome equality(TaskReport& r, const EqualityReport& e, const std::string& lhs_alg, const std::string& lhs_coeff,
                 const std::string& rhs_alg, const std::string& rhs_coeff, const TowerFixture& t) {
  add_checks(r, e.hypotheses);
  if (!e.accepted) {
    r.notes.push_back("refused: " + e.rejection);
    return {"refused", kCheckFailed};
  }
  const std::string f = t.i.target->field.to_string();
  r.tables.push_back({"lhs", lhs_alg, structure_hash(*t.i.source), f, lhs_coeff, e.lhs});
  r.tables.push_back({"rhs", rhs_alg, structure_hash(*t.i.target), f, rhs_coeff, e.rhs});
  for (std::size_t d = 0; d < e.per_degree.size(); ++d)
    r.checks.push_back({"degree_" + std::to_string(d) + "_equal", bool(e.per_degree[d]),
                        std::to_string(e.lhs[d]) + " vs " + std::to_string(e.rhs[d])});
  return from_checks(r);
}

Outcome dispatch(const TaskConfig& c, TaskReport& r) {
  const std::string& k = c.kind;
  if (k == "hopf-check") {
    if (!c.family.empty()) {
      Matrix m = task_matrix(c);
      PresentedHopf h;
      if (c.family == "bilinear")
        h = bilinear_form_hopf(m, c.cap.value_or(3), completion(c));
      else if (c.family == "cosovereign")
        h = universal_cosovereign(m, c.cap.value_or(3), completion(c));
      else
        throw std::invalid_argument("unknown family " + c.family + " (bilinear, cosovereign)");
      add_checks(r, hopf_axiom_check_to_cap(h));
      r.notes.push_back("normal words up to each length: " + join_dims(filtration_dims(h, h.cap)));
      r.notes.push_back("rules: " + std::to_string(h.rules->rules().size()) +
                        ", overlaps checked: " + std::to_string(h.rules->certificate().overlaps_checked));
      return from_checks(r);
    }
    add_checks(r, check_hopf_axioms(*subject(c).a));
    return from_checks(r);
  }
  if (k == "yd-check") {
    auto s = subject(c);
    add_checks(r, yd_check(coefficient_module(s.a, c.coeff, s.tower ? &*s.tower : nullptr)));
    return from_checks(r);
  }
  if (k == "gs-compute") {
    auto s = subject(c);
    auto v = coefficient_module(s.a, c.coeff, s.tower ? &*s.tower : nullptr);
    GSEngine eng(s.a, c.max_degree, resolution(c));
    add_checks(r, eng.trivial_resolution().verification);
    r.tables.push_back(table_of("H", eng.table(v, c.coeff), c.fixture));
    return from_checks(r);
  }
  if (k == "verify-corollary") {
    need_fixture(c);
    auto t = tower_fixture(c.fixture);
    auto e = verify_corollary(t.i, t.p, c.max_degree, resolution(c));
    return equality(r, e, "B", "trivial", "A", "sum of characters of L", t);
  }
  if (k == "verify-restriction") {
    need_fixture(c);
    auto t = tower_fixture(c.fixture);
    auto x = coefficient_module(t.i.target, c.coeff, &t);
    auto e = verify_theorem_restriction(t.i, t.p, x, c.max_degree, resolution(c));
    return equality(r, e, "B", c.coeff + " restricted", "A", c.coeff + " tensor L*", t);
  }
  if (k == "verify-smash-iso") {
    auto rep = verify_smash_iso(task_matrix(c), c.cap.value_or(4), completion(c));
    add_checks(r, rep.checks);
    add_relations(r, "tau", rep.tau.relations);
    add_relations(r, "forward", rep.forward.relations);
    add_relations(r, "backward", rep.backward.relations);
    return from_checks(r);
  }
  if (k == "bplus-check") {
    auto rep = bplus_sequence_check(task_matrix(c), c.cap.value_or(3), completion(c));
    add_checks(r, rep.checks);
    add_relations(r, "p", rep.relations);
    if (!rep.note.empty()) r.notes.push_back(rep.note);
    return from_checks(r);
  }
  if (k == "genericity") {
    GenericityResult g;
    if (!c.t.empty()) {
      if (!c.matrix.empty() || !c.matrix_file.empty()) throw std::invalid_argument("give t or a matrix, not both");
      Rational t;
      if (t.set_str(c.t, 10) != 0) throw std::invalid_argument("t must be a rational like 9/2: " + c.t);
      t.canonicalize();
      g = genericity_from_invariant(t);
    } else {
      g = genericity_check(task_matrix(c));
    }
    r.checks.push_back({"generic", g.verdict == Genericity::generic, to_string(g.verdict) + ", t = " + g.t.get_str()});
    r.notes.push_back(g.explanation);
    return from_checks(r);
  }
  throw std::invalid_argument("unknown task kind " + k);
}

std::string label(const TaskConfig& c) {
  if (!c.fixture.empty()) return c.kind + " " + c.fixture;
  if (!c.matrix.empty()) return c.kind + " " + c.matrix + (c.family.empty() ? "" : " " + c.family);
  if (!c.matrix_file.empty()) return c.kind + " " + c.matrix_file;
  if (!c.t.empty()) return c.kind + " t=" + c.t;
  return c.kind;
}

}  // namespace

TaskConfig task_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("each task must be a JSON object");
  TaskConfig c;
  auto str = [&](const std::string& key, std::string& dst) {
    if (!j[key].is_string()) throw std::invalid_argument(key + " must be a string");
    dst = j[key].get<std::string>();
  };
  auto num = [&](const std::string& key, auto& dst) {
    if (!j[key].is_number_unsigned()) throw std::invalid_argument(key + " must be a nonnegative integer");
    dst = j[key].get<std::remove_reference_t<decltype(dst)>>();
  };
  for (const auto& [key, _] : j.items()) {
    if (key == "kind") str(key, c.kind);
    else if (key == "fixture") str(key, c.fixture);
    else if (key == "coeff") str(key, c.coeff);
    else if (key == "matrix") str(key, c.matrix);
    else if (key == "matrix_file") str(key, c.matrix_file);
    else if (key == "field") str(key, c.field);
    else if (key == "family") str(key, c.family);
    else if (key == "t") str(key, c.t);
    else if (key == "max_degree") num(key, c.max_degree);
    else if (key == "cap") {
      std::size_t cap = 0;
      num(key, cap);
      c.cap = cap;
    } else if (key == "seed") num(key, c.seed);
    else if (key == "rank_ceiling") num(key, c.rank_ceiling);
    else if (key == "max_rules") num(key, c.max_rules);
    else throw std::invalid_argument("unknown task key " + key);
  }
  if (c.kind.empty()) throw std::invalid_argument("task needs a kind");
  return c;
}

json to_json(const TaskConfig& c) {
  json j{{"kind", c.kind},       {"coeff", c.coeff}, {"max_degree", c.max_degree},     {"field", c.field},
         {"seed", c.seed},       {"rank_ceiling", c.rank_ceiling}, {"max_rules", c.max_rules}};
  if (!c.fixture.empty()) j["fixture"] = c.fixture;
  if (c.cap) j["cap"] = *c.cap;
  if (!c.matrix.empty()) j["matrix"] = c.matrix;
  if (!c.matrix_file.empty()) j["matrix_file"] = c.matrix_file;
  if (!c.family.empty()) j["family"] = c.family;
  if (!c.t.empty()) j["t"] = c.t;
  return j;
}

std::vector<TaskConfig> tasks_from_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (j.is_object()) {
    for (const auto& [key, _] : j.items())
      if (key != "tasks") throw std::invalid_argument("unknown config key " + key);
    if (!j.contains("tasks")) throw std::invalid_argument("config needs a tasks array");
    j = j["tasks"];
  }
  if (!j.is_array()) throw std::invalid_argument("tasks must be an array");
  std::vector<TaskConfig> out;
  for (const auto& t : j) out.push_back(task_from_json(t));
  return out;
}

TaskReport run_task(const TaskConfig& c, bool timing) {
  TaskReport r;
  r.name = label(c);
  r.task = to_json(c);
  auto start = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& verdict, int code, const std::string& what) {
    r.verdict = verdict;
    r.exit_code = code;
    r.notes.push_back(what);
  };
  try {
    std::string hashed = r.task.dump();
    if (!c.matrix_file.empty()) hashed += slurp(matrix_path(c));
    r.input_hash = fnv_hex(hashed);
    Outcome o = dispatch(c, r);
    r.verdict = o.verdict;
    r.exit_code = o.code;
  } catch (const ResolutionError& e) {
    fail("ceiling", kCeiling, std::string("resource ceiling: ") + e.what());
  } catch (const CompletionError& e) {
    fail("ceiling", kCeiling, std::string("resource ceiling: ") + e.what());
  } catch (const std::invalid_argument& e) {
    fail("error", kInputError, std::string("input error: ") + e.what());
  } catch (const FieldError& e) {
    fail("error", kInputError, std::string("input error: ") + e.what());
  } catch (const GroupError& e) {
    fail("error", kInputError, std::string("input error: ") + e.what());
  } catch (const YDError& e) {
    fail("error", kInputError, std::string("input error: ") + e.what());
  } catch (const json::exception& e) {
    fail("error", kInputError, std::string("input error: ") + e.what());
  } catch (const std::exception& e) {
    fail("fail", kCheckFailed, std::string("internal error: ") + e.what());
  }
  if (timing)
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report run_tasks(const std::vector<TaskConfig>& tasks, bool timing) {
  Report rep;
  rep.tool_version = kToolVersion;
  rep.tasks.resize(tasks.size());
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rep.tasks[i] = run_task(tasks[i], timing);
  return rep;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Hopf algebra cohomology computations", "hopfgs"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format = "text", output, cache_dir, config;
  bool timing = false;
  app.add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--output,-o", output, "write the report here instead of stdout");
  app.add_option("--cache-dir", cache_dir, "rewrite-rule cache (default $HOPFGS_CACHE_DIR)");
  app.add_flag("--timing", timing, "record elapsed time per task");

  TaskConfig c;
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed);
    s->add_option("--rank-ceiling", c.rank_ceiling);
    s->add_option("--max-rules", c.max_rules);
  };
  auto fixture = [&](CLI::App* s, bool required) {
    auto o = s->add_option("--fixture", c.fixture, "e.g. kZ6@F4 or Z6-over-Z2@F4");
    if (required) o->required();
  };
  auto matrix = [&](CLI::App* s) {
    s->add_option("--matrix", c.matrix, "I2, diag12, Eq2, J2");
    s->add_option("--matrix-file", c.matrix_file, "JSON array of rows of strings");
    s->add_option("--field", c.field, "Q, F<p>, F<p^k>, Q(i), ...");
  };
  auto degree = [&](CLI::App* s) { s->add_option("--max-degree", c.max_degree); };
  auto cap = [&](CLI::App* s) {
    s->add_option_function<std::size_t>("--cap", [&](std::size_t v) { c.cap = v; }, "word length cap");
  };

  std::vector<std::pair<CLI::App*, std::string>> kinds;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto s = app.add_subcommand(name, help);
    kinds.push_back({s, name});
    common(s);
    return s;
  };
  auto s_hopf = sub("hopf-check", "Hopf axioms of a fixture or of B(E)/H(F) up to the cap");
  fixture(s_hopf, false);
  matrix(s_hopf);
  cap(s_hopf);
  s_hopf->add_option("--family", c.family, "bilinear or cosovereign");
  auto s_yd = sub("yd-check", "Yetter-Drinfeld axioms of a coefficient module");
  fixture(s_yd, true);
  s_yd->add_option("--coeff", c.coeff);
  auto s_gs = sub("gs-compute", "Gerstenhaber-Schack cohomology dimensions");
  fixture(s_gs, true);
  s_gs->add_option("--coeff", c.coeff, "trivial, coadjoint, quotient, char:<k>");
  degree(s_gs);
  auto s_cor = sub("verify-corollary", "H_b(B) against the character sum over A");
  fixture(s_cor, true);
  degree(s_cor);
  auto s_res = sub("verify-restriction", "restriction isomorphism with coefficients");
  fixture(s_res, true);
  s_res->add_option("--coeff", c.coeff);
  degree(s_res);
  auto s_smash = sub("verify-smash-iso", "H(E^t E^-1) smash kZ2 against B(E) * kZ2");
  matrix(s_smash);
  cap(s_smash);
  auto s_bplus = sub("bplus-check", "B(E) -> kZ2 with kernel B+");
  matrix(s_bplus);
  cap(s_bplus);
  auto s_gen = sub("genericity", "genericity of F or of the invariant t");
  s_gen->add_option("--t", c.t, "tr(F) tr(F^-1), a rational");
  matrix(s_gen);
  auto s_fix = app.add_subcommand("fixtures", "fixture library");
  s_fix->require_subcommand(1);
  auto s_list = s_fix->add_subcommand("list", "list fixtures and their designated tasks");
  auto s_run = app.add_subcommand("run", "run a JSON task list");
  s_run->add_option("--config", config, "JSON file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  if (!cache_dir.empty()) ::setenv("HOPFGS_CACHE_DIR", cache_dir.c_str(), 1);

  std::string text;
  Report report;
  report.tool_version = kToolVersion;
  if (s_list->parsed()) {
    auto list = fixture_list();
    if (format == "json") {
      json j = json::array();
      for (const auto& f : list)
        j.push_back({{"name", f.name}, {"kind", f.kind}, {"task", f.task}, {"args", f.args},
                     {"expected_exit", f.expected_exit}});
      text = j.dump(2) + "\n";
    } else {
      std::ostringstream o;
      for (const auto& f : list) {
        o << std::left << std::setw(22) << f.name << std::setw(8) << f.kind << "hopfgs";
        for (const auto& a : f.args) o << " " << a;
        o << "   (exit " << f.expected_exit << ")\n";
      }
      text = o.str();
    }
  } else {
    std::vector<TaskConfig> tasks;
    if (s_run->parsed()) {
      try {
        tasks = tasks_from_config_text(slurp(config));
        for (auto& t : tasks) t.base_dir = std::filesystem::path(config).parent_path().string();
      } catch (const std::invalid_argument& e) {
        err << "hopfgs: " << e.what() << "\n";
        return kInputError;
      }
    } else {
      for (const auto& [s, name] : kinds)
        if (s->parsed()) c.kind = name;
      tasks.push_back(c);
    }
    report = run_tasks(tasks, timing);
    for (const auto& t : report.tasks)
      if (t.exit_code == kInputError || t.exit_code == kCeiling)
        for (const auto& n : t.notes) err << "hopfgs: " << t.name << ": " << n << "\n";
    text = emit_report(report, parse_format(format));
  }

  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "hopfgs: cannot write " << output << "\n";
      return kInputError;
    }
    f << text;
  }
  return report.exit_code();
}

}  // namespace hgs::cli
