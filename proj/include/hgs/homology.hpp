#pragma once

// Ext over finite-dimensional algebras through free resolutions, and
// Gerstenhaber-Schack cohomology H_GS(A, V) = Ext_{D(A)}(k, V).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgs/yd.hpp"

namespace hgs {

class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(const std::string& what, std::size_t rank) : std::runtime_error(what), rank(rank) {}
  std::size_t rank;
};

/// Jacobson radical. Char 0: kernel of the trace form. Char p: iterated
/// generalized traces over the prime field. The result is checked to be a
/// nilpotent two-sided ideal with semisimple quotient; std::logic_error
/// otherwise.
Subspace radical(const FinDimAlgebra& d);

/// Structure constants of D/I for a two-sided ideal I (basis: quotient
/// representatives).
FinDimAlgebra quotient_algebra(const FinDimAlgebra& d, const Subspace& ideal);

struct ResolutionOptions {
  std::size_t max_degree = 4;
  std::size_t rank_ceiling = 4096;
  /// false: every stage is covered by a basis of the kernel (rank = dim K)
  bool minimal = true;
  std::uint64_t seed = 1;
};

/// Stage i >= 1 has d_i : D^{r_i} -> D^{r_{i-1}}, e_j -> generators[i][j].
/// Stage 0 maps e_j to generators[0][j] in the resolved module.
/// When D is semisimple the resolved module is its own projective
/// resolution: `projective_terminal` is set and r_i = 0 for i >= 1.
struct FreeResolution {
  std::shared_ptr<const FinDimAlgebra> algebra;
  FDModule module;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Vec>> generators;
  std::vector<SparseMatrix> differentials;  // [0] is the augmentation
  bool projective_terminal = false;
  /// entries: augmentation_surjective, d_squared_zero, exactness
  CheckReport verification;
};

/// Caches the radical and multiplication data of one algebra.
class ExtEngine {
 public:
  explicit ExtEngine(std::shared_ptr<const FinDimAlgebra> d);
  const FinDimAlgebra& algebra() const { return *d_; }
  const Subspace& radical() const { return rad_; }
  bool semisimple() const { return rad_.dim() == 0; }

  /// Resolution through degree max_degree + 1. Throws ResolutionError when a
  /// stage would exceed the rank ceiling.
  FreeResolution resolve(const FDModule& m, const ResolutionOptions& opt = {}) const;
  /// dim Ext^i(M, N) for i = 0..max_degree
  std::vector<std::size_t> ext_dims(const FreeResolution& r, const FDModule& n) const;

 private:
  std::shared_ptr<const FinDimAlgebra> d_;
  Subspace rad_;
  std::vector<SparseMatrix> right_;  // x -> x b_k
};

FreeResolution minimal_free_resolution(const FinDimAlgebra& d, const FDModule& m, std::size_t max_degree);
std::vector<std::size_t> ext_dims(const FinDimAlgebra& d, const FDModule& m, const FDModule& n, std::size_t max_degree);

/// Ext_{kZ_n}(k, k) from the 2-periodic complex with differentials h - 1
/// and 1 + h + ... + h^{n-1}.
std::vector<std::size_t> cyclic_oracle(std::size_t n, Field f, std::size_t max_degree);

struct CohomologyTable {
  std::string algebra;       // labels or description of A
  std::string algebra_hash;  // FNV-1a of the structure tensors
  std::string field;
  std::string coefficients;
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;
};

std::string structure_hash(const FinDimHopf& a);

/// The double of A, its engine, and the resolution of k, shared across
/// coefficient modules.
class GSEngine {
 public:
  GSEngine(HopfPtr a, std::size_t max_degree, ResolutionOptions opt = {});
  const FinDimHopf& hopf() const { return *a_; }
  HopfPtr hopf_ptr() const { return a_; }
  const DrinfeldDouble& drinfeld() const { return *double_; }
  const ExtEngine& engine() const { return engine_; }
  const FreeResolution& trivial_resolution() const { return res_; }
  std::vector<std::size_t> dims(const YDModule& v) const;
  CohomologyTable table(const YDModule& v, const std::string& coefficients) const;

 private:
  HopfPtr a_;
  std::shared_ptr<const DrinfeldDouble> double_;
  ExtEngine engine_;
  FreeResolution res_;
};

CohomologyTable gs_cohomology(HopfPtr a, const YDModule& v, std::size_t max_degree);
CohomologyTable bialgebra_cohomology(HopfPtr a, std::size_t max_degree);

struct EqualityReport {
  CheckReport hypotheses;
  bool accepted = false;
  std::string rejection;  // first failed hypothesis
  std::vector<std::size_t> lhs, rhs;
  std::vector<bool> per_degree;
  bool all_equal() const;
};

/// H_b(B) against the sum over psi in Gamma^ of H_GS(A, k_psi).
EqualityReport verify_corollary(const HopfMorphism& i, const HopfMorphism& p, std::size_t max_degree,
                                const ResolutionOptions& opt = {});
/// H_GS(B, X^(B)) against H_GS(A, X (x) L*), L = A/B^+A cosemisimple.
EqualityReport verify_theorem_restriction(const HopfMorphism& i, const HopfMorphism& p, const YDModule& x,
                                          std::size_t max_degree, const ResolutionOptions& opt = {});

struct ObservedDimension {
  std::size_t value = 0;
  bool saturated = false;  // nonzero at max_degree: the true value is >= it
  std::string to_string() const;
};

/// sup{n <= max_degree : H^n_GS(A, V) != 0 for some supplied V}.
/// Throws std::invalid_argument("no coefficients") on an empty list.
ObservedDimension cd_gs_observed(HopfPtr a, const std::vector<YDModule>& coefficients, std::size_t max_degree);
ObservedDimension cd_from_dims(const std::vector<std::vector<std::size_t>>& dims, std::size_t max_degree);

}  // namespace hgs
