#pragma once

// Plain finite-dimensional associative algebras and their right modules.

#include <string>
#include <vector>

#include "hgs/linalg.hpp"

namespace hgs {

/// Outcome of one named check; `witness` names the offending basis data.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  /// nullptr when no check has that name
  const CheckResult* find(const std::string& name) const;
  /// "name: witness" of the first failure, empty when everything passed
  std::string first_failure() const;
};

/// out += c * v (v sparse)
void add_sparse(Vec& out, const Scalar& c, const SparseVec& v);
SparseVec to_sparse(const Vec& v);

struct FinDimAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<SparseVec> mult;  // mult[i*dim+j] = b_i b_j
  Vec unit;

  Vec mul(const Vec& x, const Vec& y) const;
  /// x -> x b_k
  Matrix right_mult(std::size_t k) const;
  /// x -> b_k x
  Matrix left_mult(std::size_t k) const;
};

CheckReport check_algebra_axioms(const FinDimAlgebra& d);

/// Right module: v . b_k = act[k] v (column vectors), so
/// act[j] act[i] = sum_k c^k_ij act[k].
struct FDModule {
  Field field;
  std::size_t dim = 0;
  std::vector<Matrix> act;

  /// Matrix of the action of an arbitrary algebra element.
  Matrix rho(const Vec& x) const;
};

CheckReport check_module_axioms(const FinDimAlgebra& d, const FDModule& m);

/// D acting on itself by right multiplication.
FDModule regular_module(const FinDimAlgebra& d);

/// Basis of Hom_D(M, N), each map a dim N x dim M matrix.
std::vector<Matrix> module_homs(const FDModule& m, const FDModule& n);

}  // namespace hgs
