#pragma once

// Right-right Yetter-Drinfeld modules over a FinDimHopf.
//
// Storage: act[j] is v -> v.a_j, and the coaction is
// rho(v) = sum_j (co[j] v) (x) a_j. The YD condition reads
// (v.a)_0 (x) (v.a)_1 = v_0.a_2 (x) S(a_1) v_1 a_3.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgs/hopf.hpp"

namespace hgs {

class YDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct YDModule {
  HopfPtr base;
  std::size_t dim = 0;
  std::vector<Matrix> act;
  std::vector<Matrix> co;

  Field field() const { return base->field; }
  /// Action matrix of an arbitrary element of the base.
  Matrix action(const Vec& a) const;
};

/// Entries: module, comodule, yd_condition.
CheckReport yd_check(const YDModule& v);

YDModule trivial_yd(HopfPtr a);
YDModule direct_sum(const YDModule& v, const YDModule& w);

struct Character {
  HopfPtr base;
  Vec values;  // psi(a_k)
};

/// Entries: algebra_map, central_type.
CheckReport character_check(const Character& psi);
/// One-dimensional YD module with action psi and trivial coaction.
YDModule k_psi(const Character& psi);
/// Convolution psi*phi, i.e. the character of k_psi (x) k_phi.
Character character_product(const Character& psi, const Character& phi);

/// YD structure on L = p(A) for a linear surjection p : A -> L whose kernel
/// is a right ideal: p(x).a = p(xa), p(a) -> p(a_2) (x) S(a_1) a_3.
/// Throws YDError when the structure does not descend.
YDModule coadjoint(HopfPtr a, const Matrix& p);
/// Coadjoint structure on A/B^+A.
YDModule coadjoint_quotient(const HopfMorphism& i);

YDModule tensor_yd(const YDModule& v, const YDModule& w);
/// (f.a)(v) = f(v.S^{-1}(a)), f_0(v) f_1 = f(v_0) S(v_1).
YDModule dual_yd(const YDModule& v);
/// V* (x) V -> k and k -> V (x) V*.
Matrix evaluation_map(const YDModule& v);
Matrix coevaluation_map(const YDModule& v);

struct Restriction {
  YDModule module;      // over B
  Subspace subspace;    // X^(B) inside X
  Subspace cotensor;    // image of the cotensor product X box_A B under id (x) eps
};
/// X^(B) = {x : rho(x) in X (x) i(B)}; also computes the cotensor product
/// independently. Throws YDError if X^(B) is not B-stable.
Restriction restrict_to(const YDModule& x, const HopfMorphism& i);

/// V (x)_B A for a YD module V over B.
YDModule induce(const YDModule& v, const HopfMorphism& i);

/// A_g = {a : a_1 (x) p(a_2) = a (x) g} for p onto a group algebra, one per
/// group element. Throws YDError when they do not form a grading.
std::vector<Subspace> grading_components(const HopfMorphism& p);

/// Hom(G, k*) as characters of kG, ordered lexicographically by value
/// vectors (1 first, then canonical_less); the trivial character leads.
std::vector<Character> group_characters(HopfPtr kg);

class FourierError : public std::runtime_error {
 public:
  enum class Kind { order_zero, missing_roots, not_abelian, not_cocentral };
  FourierError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  Kind kind;
};

struct FourierTransform {
  std::vector<Character> characters;  // characters of the group, pulled back along p
  Matrix matrix;                      // F[psi][g] = psi(g)
  YDModule source;                    // coadjoint structure on k Gamma
  YDModule target;                    // direct sum of the k_psi
};
FourierTransform fourier_transform(const HopfMorphism& p);

CheckResult yd_morphism_check(const Matrix& f, const YDModule& v, const YDModule& w);
/// Basis of Hom_YD(V, W).
std::vector<Matrix> yd_homs(const YDModule& v, const YDModule& w);
/// Random elements of Hom_YD(V, W) under a fixed seed schedule; returns a
/// certified isomorphism or nullopt.
std::optional<Matrix> yd_iso_search(const YDModule& v, const YDModule& w, std::uint64_t seed = 1, int tries = 32);

/// V as a module over the double, and back.
FDModule yd_to_double_module(const YDModule& v, const DrinfeldDouble& d);
YDModule double_module_to_yd(const FDModule& m, HopfPtr a);

}  // namespace hgs
