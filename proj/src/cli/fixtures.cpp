#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hgs/fixtures.hpp"

namespace hgs {

namespace {

std::pair<std::string, std::string> split_field(const std::string& name) {
  auto at = name.rfind('@');
  if (at == std::string::npos) throw FixtureError("fixture needs a field suffix, e.g. kZ2@F2: " + name);
  return {name.substr(0, at), name.substr(at + 1)};
}

std::size_t parse_size(const std::string& s, const std::string& context) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw FixtureError("bad number in " + context);
  return std::stoul(s);
}

// subgroup of g generated by the first element of the given order
std::vector<std::size_t> cyclic_subgroup(const Group& g, std::size_t order, const std::string& context) {
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.element_order(a) == order) return g.generated_subgroup({a});
  throw FixtureError("no cyclic subgroup of order " + std::to_string(order) + " in " + context);
}

}  // namespace

Group group_fixture(const std::string& name) {
  if (name.size() < 2) throw FixtureError("unknown group " + name);
  std::size_t n = parse_size(name.substr(1), "group " + name);
  switch (name[0]) {
    case 'Z':
      if (n == 0) break;
      return Group::cyclic(n);
    case 'S':
      return Group::symmetric(n);
    case 'D':
      return Group::dihedral(n);
    default:
      break;
  }
  throw FixtureError("unknown group " + name);
}

HopfPtr hopf_fixture(const std::string& name) {
  auto [alg, field] = split_field(name);
  Field f = Field::parse(field);
  if (alg.rfind("k^", 0) == 0) return std::make_shared<const FinDimHopf>(dual_hopf(group_algebra(group_fixture(alg.substr(2)), f)));
  if (alg.rfind("k", 0) == 0) return make_group_algebra(group_fixture(alg.substr(1)), f);
  throw FixtureError("unknown Hopf algebra fixture " + name);
}

bool is_tower_name(const std::string& name) { return name.find("-over-") != std::string::npos; }

TowerFixture tower_fixture(const std::string& name) {
  auto [spec, field] = split_field(name);
  bool dual = spec.rfind("dual-", 0) == 0;
  if (dual) spec = spec.substr(5);
  auto over = spec.find("-over-");
  if (over == std::string::npos) throw FixtureError("tower fixtures look like Z6-over-Z2@F4: " + name);
  Group g = group_fixture(spec.substr(0, over));
  std::string sub = spec.substr(over + 6);
  if (sub.empty() || sub[0] != 'Z') throw FixtureError("only cyclic subgroups are supported: " + name);
  auto elements = cyclic_subgroup(g, parse_size(sub.substr(1), name), name);
  auto kg = make_group_algebra(g, Field::parse(field));

  TowerFixture t;
  t.name = name;
  t.normal = g.is_normal(elements);
  t.i = subgroup_inclusion(kg, elements);
  if (!t.normal) {
    if (dual) throw FixtureError("dual towers need a normal subgroup: " + name);
    t.p = {kg, nullptr, quotient_by_subalgebra(t.i).proj};
    return t;
  }
  t.p = quotient_map(kg, elements);
  if (!dual) return t;
  // L* -> A* -> B*
  auto a = std::make_shared<const FinDimHopf>(dual_hopf(*kg));
  auto b = std::make_shared<const FinDimHopf>(dual_hopf(*t.p.target));
  auto l = std::make_shared<const FinDimHopf>(dual_hopf(*t.i.source));
  HopfMorphism i = dual_morphism(t.p, b, a), p = dual_morphism(t.i, a, l);
  t.i = i;
  t.p = p;
  return t;
}

Matrix matrix_fixture(const std::string& name, Field f) {
  auto m = [&](std::vector<std::vector<long>> rows) {
    Matrix out(f, rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = f.from_int(rows[i][j]);
    return out;
  };
  if (name == "I2") return m({{1, 0}, {0, 1}});
  if (name == "diag12") return m({{1, 0}, {0, 2}});
  if (name == "J2") return m({{0, 1}, {-1, 0}});
  if (name == "Eq2") return standard_q_matrix(f.from_int(2));
  if (name.size() > 1 && name[0] == 'I') return Matrix::identity(f, parse_size(name.substr(1), name));
  throw FixtureError("unknown matrix fixture " + name);
}

Matrix matrix_from_json_text(const std::string& text, Field f) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw FixtureError("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FixtureError("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_string()) throw FixtureError("matrix entries must be strings");
      m(r, c) = f.parse_element(j[r][c].get<std::string>());
    }
  }
  return m;
}

Matrix read_matrix_file(const std::string& path, Field f) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_json_text(ss.str(), f);
}

YDModule coefficient_module(HopfPtr a, const std::string& spec, const TowerFixture* tower) {
  if (spec == "trivial") return trivial_yd(a);
  if (spec == "coadjoint") return coadjoint(a, Matrix::identity(a->field, a->dim));
  if (spec == "quotient") {
    if (!tower || tower->i.target != a) throw FixtureError("quotient coefficients need a tower fixture");
    return coadjoint_quotient(tower->i);
  }
  if (spec.rfind("char:", 0) == 0) {
    if (!a->group) throw FixtureError("characters need a group algebra");
    auto chars = group_characters(a);
    std::size_t k = parse_size(spec.substr(5), spec);
    if (k >= chars.size()) throw FixtureError("only " + std::to_string(chars.size()) + " characters available");
    return k_psi(chars[k]);
  }
  throw FixtureError("unknown coefficients " + spec + " (trivial, coadjoint, quotient, char:<k>)");
}

std::vector<FixtureInfo> fixture_list() {
  auto gs = [](const std::string& name, const std::string& deg) {
    return FixtureInfo{name, "hopf", "gs-compute", {"gs-compute", "--fixture", name, "--coeff", "trivial", "--max-degree", deg}, 0};
  };
  auto cor = [](const std::string& name, const std::string& deg, int exit) {
    return FixtureInfo{name, "tower", "verify-corollary", {"verify-corollary", "--fixture", name, "--max-degree", deg}, exit};
  };
  return {
      gs("kZ2@F2", "4"),
      gs("kZ3@F3", "4"),
      gs("kZ4@Q", "4"),
      gs("kZ6@F4", "4"),
      gs("kS3@Q", "4"),
      gs("kS3@F3", "4"),
      gs("k^S3@Q", "4"),
      cor("Z4-over-Z2@Q", "4", 0),
      cor("Z6-over-Z2@F4", "4", 0),
      cor("S3-over-Z3@F3", "4", 0),
      cor("S3-over-Z2@Q", "4", 1),
      FixtureInfo{"dual-Z6-over-Z2@F2", "tower", "verify-restriction",
                  {"verify-restriction", "--fixture", "dual-Z6-over-Z2@F2", "--coeff", "trivial", "--max-degree", "3"}, 1},
      FixtureInfo{"I2", "matrix", "verify-smash-iso", {"verify-smash-iso", "--matrix", "I2", "--cap", "4"}, 0},
      FixtureInfo{"diag12", "matrix", "verify-smash-iso", {"verify-smash-iso", "--matrix", "diag12", "--cap", "4"}, 0},
      FixtureInfo{"Eq2", "matrix", "bplus-check", {"bplus-check", "--matrix", "Eq2", "--cap", "3"}, 0},
      FixtureInfo{"J2", "matrix", "hopf-check", {"hopf-check", "--family", "bilinear", "--matrix", "J2", "--cap", "3"}, 0},
  };
}

}  // namespace hgs
