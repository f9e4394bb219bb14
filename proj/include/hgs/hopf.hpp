#pragma once

// Finite-dimensional Hopf algebras as structure tensors in a fixed basis
// a_0..a_{n-1}, their morphisms, exact sequences and the Drinfeld double.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgs/algebra.hpp"
#include "hgs/group.hpp"

namespace hgs {

struct FinDimHopf {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<SparseVec> mult;    // mult[i*dim+j] = a_i a_j
  Vec unit;
  std::vector<SparseVec> comult;  // comult[k]: coefficients of a_s (x) a_t at s*dim+t
  Vec counit;
  Matrix antipode;                // column k = S(a_k)
  /// Set for group algebras: basis element k is the group element k.
  std::shared_ptr<const Group> group;

  Vec basis(std::size_t k) const { return unit_vec(field, dim, k); }
  Vec mul(const Vec& x, const Vec& y) const;
  /// Delta(x) as a vector of length dim^2.
  Vec comul(const Vec& x) const;
  Scalar eps(const Vec& x) const;
  Vec S(const Vec& x) const { return antipode.apply(x); }
  FinDimAlgebra algebra() const;
  std::string label(std::size_t k) const { return k < labels.size() ? labels[k] : std::to_string(k); }
};

using HopfPtr = std::shared_ptr<const FinDimHopf>;

FinDimHopf group_algebra(const Group& g, Field f);
inline HopfPtr make_group_algebra(const Group& g, Field f) {
  return std::make_shared<const FinDimHopf>(group_algebra(g, f));
}

/// Dual Hopf algebra in the dual basis f_0..f_{n-1}.
FinDimHopf dual_hopf(const FinDimHopf& h);

/// Associativity, unit, coassociativity, counit, multiplicativity of Delta
/// and of epsilon, antipode identity.
CheckReport check_hopf_axioms(const FinDimHopf& h);

struct HopfMorphism {
  HopfPtr source, target;
  Matrix map;  // target.dim x source.dim, column k = f(a_k)
};

/// Entries: multiplicative, unital, comultiplicative, counital, antipode.
/// A Hopf map needs the first four; the antipode entry is informational.
CheckReport morphism_check(const Matrix& f, const FinDimHopf& h1, const FinDimHopf& h2);
bool is_hopf_morphism(const CheckReport& r);

/// Algebra map kG -> kH induced by images[g].
HopfMorphism group_algebra_map(HopfPtr src, HopfPtr tgt, const std::vector<std::size_t>& images);

/// kN -> kG for the subgroup with the given elements of G.
HopfMorphism subgroup_inclusion(HopfPtr kg, const std::vector<std::size_t>& elements);
/// kG -> k[G/N] for a normal subgroup N.
HopfMorphism quotient_map(HopfPtr kg, const std::vector<std::size_t>& normal);
/// f* : target* -> source*, between the given dual algebras.
HopfMorphism dual_morphism(const HopfMorphism& f, HopfPtr target_dual, HopfPtr source_dual);

/// p(a1) (x) a2 = p(a2) (x) a1 on every basis element.
CheckResult cocentral_check(const Matrix& p, const FinDimHopf& a);
inline CheckResult cocentral_check(const HopfMorphism& p) { return cocentral_check(p.map, *p.source); }

struct ExactSequenceWitness {
  bool injective = false, surjective = false;
  Subspace ker_p, bplus_a, a_bplus, image_i, coinv_right, coinv_left;
  bool cond1 = false, cond2 = false, cond3 = false;
  bool pi_is_counit = false;
  bool all() const { return cond1 && cond2 && cond3; }
};

/// Conditions for B -> A -> L. `p` only needs to be linear (L may be a
/// quotient coalgebra); its target unit is p(1).
ExactSequenceWitness verify_exact_sequence(const HopfMorphism& i, const Matrix& p);
inline ExactSequenceWitness verify_exact_sequence(const HopfMorphism& i, const HopfMorphism& p) {
  return verify_exact_sequence(i, p.map);
}

/// B^+ A for an inclusion i : B -> A.
Subspace augmentation_right_ideal(const HopfMorphism& i);

/// Quotient A/I by a coideal I; `hopf` is set when I is also a Hopf ideal.
struct HopfQuotient {
  std::size_t dim = 0;
  Matrix proj;                    // dim x A.dim
  std::vector<std::size_t> reps;  // basis e_r of the quotient lifts to a_{reps[r]}
  std::vector<SparseVec> comult;
  Vec counit;
  std::optional<FinDimHopf> hopf;
};
HopfQuotient quotient_by_coideal(const FinDimHopf& a, const Subspace& ideal);
/// A/B^+A, with the projection A -> L.
HopfQuotient quotient_by_subalgebra(const HopfMorphism& i);

/// Coefficients X with (1 (x) a_j)(f_m (x) 1) = sum X[j*n+m]_{r*n+t} f_r (x) a_t,
/// i.e. X[j*n+m]_{r*n+t} = sum C^j_stu [S(a_s) a_r a_u]_m over Delta^2(a_j).
/// The same numbers express the YD condition Co_m Act_j = sum X Act_t Co_r.
std::vector<SparseVec> straightening(const FinDimHopf& a);

/// Basis of D = A* (x) A is f_l (x) a_j at index l*n + j. A YD module V
/// becomes a right D-module with f_l (x) a_j acting as Act_j Co_l.
struct DrinfeldDouble {
  FinDimAlgebra algebra;
  std::size_t base_dim = 0;
  std::size_t index(std::size_t l, std::size_t j) const { return l * base_dim + j; }
};
/// Throws std::domain_error when the antipode is singular.
DrinfeldDouble drinfeld_double(const FinDimHopf& a);

}  // namespace hgs
