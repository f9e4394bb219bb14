#pragma once

// Named inputs for the command-line driver and the acceptance suite.
//
//   Hopf algebras   kZ6@F4, kS3@Q, kD4@F3, k^S3@Q (function algebra)
//   towers          Z6-over-Z2@F4 (kZ2 inside kZ6), S3-over-Z3@F3,
//                   S3-over-Z2@Q (not normal), dual-Z6-over-Z2@F2
//   matrices        I2, diag12, Eq2, J2

#include <string>
#include <vector>

#include "hgs/homology.hpp"
#include "hgs/presented.hpp"

namespace hgs {

class FixtureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Z<n>, S<n>, D<n>
Group group_fixture(const std::string& name);
HopfPtr hopf_fixture(const std::string& name);

struct TowerFixture {
  std::string name;
  HopfMorphism i;  // B -> A
  /// A -> L; target is null when B is not normal and L is only a coalgebra
  HopfMorphism p;
  bool normal = true;
};
TowerFixture tower_fixture(const std::string& name);
bool is_tower_name(const std::string& name);

/// Over `f` (entries must make sense there).
Matrix matrix_fixture(const std::string& name, Field f);
/// JSON array of rows, each an array of field-element strings.
Matrix matrix_from_json_text(const std::string& text, Field f);
Matrix read_matrix_file(const std::string& path, Field f);

/// trivial, coadjoint (A itself), char:<k> (k-th group character, group
/// algebras only), and for towers quotient (L with its coadjoint structure).
YDModule coefficient_module(HopfPtr a, const std::string& spec, const TowerFixture* tower = nullptr);

struct FixtureInfo {
  std::string name, kind, task;
  std::vector<std::string> args;  // designated task arguments
  int expected_exit = 0;
};
std::vector<FixtureInfo> fixture_list();

}  // namespace hgs
