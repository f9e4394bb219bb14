#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hgs/yd.hpp"

using namespace hgs;

namespace {

Field Q() { return Field::rationals(); }

std::vector<std::size_t> elems(const Group& g, std::initializer_list<const char*> names) {
  std::vector<std::size_t> out;
  for (auto n : names) out.push_back(g.find(n));
  return out;
}

HopfPtr functions_on(const Group& g, Field f) {
  return std::make_shared<const FinDimHopf>(dual_hopf(group_algebra(g, f)));
}

// kG as a YD module with coaction Delta and the given action matrices
YDModule comultiplication_module(HopfPtr a, std::vector<Matrix> act) {
  YDModule v{a, a->dim, std::move(act), {}};
  for (std::size_t j = 0; j < a->dim; ++j) {
    Matrix m(a->field, a->dim, a->dim);
    m(j, j) = a->field.one();
    v.co.push_back(m);
  }
  return v;
}

YDModule graded_trivial_action(HopfPtr a) {
  return comultiplication_module(a, std::vector<Matrix>(a->dim, Matrix::identity(a->field, a->dim)));
}

// v.g = g^{-1} v g, YD for every group
YDModule graded_conjugation(HopfPtr a) {
  const Group& g = *a->group;
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < g.order(); ++j) {
    Matrix m(a->field, g.order(), g.order());
    for (std::size_t v = 0; v < g.order(); ++v) m(g.mul(g.inverse(j), g.mul(v, j)), v) = a->field.one();
    act.push_back(m);
  }
  return comultiplication_module(a, act);
}

Matrix ones_matrix(std::initializer_list<std::initializer_list<long>> rows, Field f) {
  std::vector<Vec> rs;
  for (auto r : rows) {
    Vec v;
    for (long x : r) v.push_back(f.from_int(x));
    rs.push_back(v);
  }
  return Matrix::from_rows(f, rs.front().size(), rs);
}

std::size_t dim_homs(const YDModule& v, const YDModule& w) { return yd_homs(v, w).size(); }

// a small zoo of YD modules over one base, all built by the library
std::vector<YDModule> zoo(HopfPtr a) {
  std::vector<YDModule> out = {trivial_yd(a), coadjoint(a, Matrix::identity(a->field, a->dim))};
  if (a->group) out.push_back(graded_conjugation(a));
  out.push_back(tensor_yd(out[1], out[0]));
  out.push_back(dual_yd(out[1]));
  return out;
}

}  // namespace

TEST(YdCheck, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  EXPECT_TRUE(yd_check(trivial_yd(z4)).all_pass());
  EXPECT_TRUE(yd_check(graded_trivial_action(z4)).all_pass());

  // the regular right action does not commute with the grading
  std::vector<Matrix> reg;
  for (std::size_t j = 0; j < 4; ++j) reg.push_back(z4->algebra().right_mult(j));
  auto bad = comultiplication_module(z4, reg);
  auto r = yd_check(bad);
  EXPECT_TRUE(r.find("module")->pass);
  EXPECT_TRUE(r.find("comodule")->pass);
  EXPECT_FALSE(r.find("yd_condition")->pass);
  EXPECT_FALSE(r.find("yd_condition")->witness.empty());
}

TEST(Character, Examples) {
  Field f4 = Field::parse("Fp(2)[x]/(x^2+x+1)");
  auto z3 = make_group_algebra(Group::cyclic(3), f4);
  Character eps{z3, z3->counit};
  EXPECT_EQ(k_psi(eps).act, trivial_yd(z3).act);
  EXPECT_EQ(k_psi(eps).co, trivial_yd(z3).co);

  Scalar x = f4.generator();
  Character psi{z3, {f4.one(), x, x * x}};
  auto kp = k_psi(psi);
  EXPECT_EQ(kp.dim, 1u);
  EXPECT_TRUE(yd_check(kp).all_pass());

  Group s3 = Group::symmetric(3);
  auto fs3 = functions_on(s3, Q());
  auto evaluation_at = [&](const char* g) {
    Character c{fs3, zero_vec(Q(), 6)};
    c.values[s3.find(g)] = Q().one();
    return c;
  };
  auto rep = character_check(evaluation_at("(123)"));
  EXPECT_TRUE(rep.find("algebra_map")->pass);
  EXPECT_FALSE(rep.find("central_type")->pass);
  EXPECT_THROW(k_psi(evaluation_at("(123)")), YDError);
  EXPECT_NO_THROW(k_psi(evaluation_at("e")));

  Character not_multiplicative{z3, {f4.one(), x, x}};
  EXPECT_FALSE(character_check(not_multiplicative).find("algebra_map")->pass);
  EXPECT_THROW(k_psi(not_multiplicative), YDError);
}

TEST(Coadjoint, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto l = coadjoint_quotient(subgroup_inclusion(z4, {0, 2}));
  EXPECT_EQ(l.dim, 2u);
  EXPECT_TRUE(yd_check(l).all_pass());
  // group-likes: S(g)g = e, so every co[j] vanishes except at the unit
  for (std::size_t j = 0; j < 4; ++j)
    EXPECT_EQ(l.co[j], j == 0 ? Matrix::identity(Q(), 2) : Matrix(Q(), 2, 2));

  Group s3g = Group::symmetric(3);
  auto s3 = make_group_algebra(s3g, Field::parse("F3"));
  auto l3 = coadjoint_quotient(subgroup_inclusion(s3, elems(s3g, {"e", "(123)", "(132)"})));
  EXPECT_EQ(l3.dim, 2u);
  EXPECT_TRUE(yd_check(l3).all_pass());

  // B = k: L = A with right multiplication
  auto fs3 = functions_on(s3g, Q());
  auto full = coadjoint_quotient(subgroup_inclusion(s3, {0}));
  EXPECT_EQ(full.dim, 6u);
  auto adj = coadjoint(fs3, Matrix::identity(Q(), 6));
  EXPECT_TRUE(yd_check(adj).all_pass());
  for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(adj.act[j], fs3->algebra().right_mult(j));
  // its coaction is a_2 (x) S(a_1) a_3, nontrivial for functions on S3
  bool nontrivial = false;
  for (std::size_t j = 1; j < 6; ++j) nontrivial |= !adj.co[j].is_zero();
  EXPECT_TRUE(nontrivial);
}

TEST(Tensor, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto v = graded_trivial_action(z4);
  auto vk = tensor_yd(v, trivial_yd(z4));
  EXPECT_EQ(vk.act, v.act);
  EXPECT_EQ(vk.co, v.co);

  Field qi = Field::parse("Qi");
  auto z4i = make_group_algebra(Group::cyclic(4, "h"), qi);
  auto chars = group_characters(z4i);
  ASSERT_EQ(chars.size(), 4u);
  for (const auto& psi : chars)
    for (const auto& phi : chars) {
      auto t = tensor_yd(k_psi(psi), k_psi(phi));
      auto p = k_psi(character_product(psi, phi));
      EXPECT_EQ(t.act, p.act);
      EXPECT_EQ(t.co, p.co);
    }

  auto l = coadjoint_quotient(subgroup_inclusion(z4, {0, 2}));
  auto ll = tensor_yd(l, l);
  EXPECT_EQ(ll.dim, 4u);
  EXPECT_TRUE(yd_check(ll).all_pass());
  EXPECT_THROW(tensor_yd(l, trivial_yd(make_group_algebra(Group::cyclic(4), Q()))), YDError);
}

TEST(Dual, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto k = trivial_yd(z4);
  EXPECT_EQ(dual_yd(k).act, k.act);
  EXPECT_EQ(dual_yd(k).co, k.co);

  Field f4 = Field::parse("F4");
  auto z3 = make_group_algebra(Group::cyclic(3), f4);
  for (const auto& psi : group_characters(z3)) {
    Character psi_s{z3, zero_vec(f4, 3)};
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t t = 0; t < 3; ++t) psi_s.values[j] += psi.values[t] * z3->antipode(t, j);
    auto d = dual_yd(k_psi(psi));
    EXPECT_EQ(d.act, k_psi(psi_s).act);
    EXPECT_EQ(d.co, k_psi(psi_s).co);
  }

  auto l = coadjoint_quotient(subgroup_inclusion(z4, {0, 2}));
  auto iso = yd_iso_search(dual_yd(l), l);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(yd_morphism_check(*iso, dual_yd(l), l).pass);
}

// evaluation and coevaluation are morphisms, on every base and module of the zoo
TEST(Dual, EvaluationAndCoevaluationAreMorphisms) {
  Group s3 = Group::symmetric(3);
  for (HopfPtr a : {make_group_algebra(s3, Field::parse("F3")), functions_on(s3, Q()), functions_on(s3, Field::parse("F2")),
                    make_group_algebra(Group::cyclic(4), Field::parse("Qi"))}) {
    for (const auto& v : zoo(a)) {
      auto d = dual_yd(v);
      EXPECT_EQ(d.dim, v.dim);
      EXPECT_TRUE(yd_check(d).all_pass()) << yd_check(d).first_failure();
      auto k = trivial_yd(a);
      auto ev = yd_morphism_check(evaluation_map(v), tensor_yd(d, v), k);
      auto coev = yd_morphism_check(coevaluation_map(v), k, tensor_yd(v, d));
      EXPECT_TRUE(ev.pass) << ev.witness;
      EXPECT_TRUE(coev.pass) << coev.witness;
    }
  }
}

TEST(Dual, DegreeZeroAdjunction) {
  Group s3 = Group::symmetric(3);
  for (HopfPtr a : {make_group_algebra(s3, Field::parse("F3")), functions_on(s3, Q())}) {
    auto mods = zoo(a);
    if (a->group) mods.push_back(coadjoint_quotient(subgroup_inclusion(a, elems(s3, {"e", "(123)", "(132)"}))));
    auto k = trivial_yd(a);
    for (const auto& x : mods)
      for (const auto& l : mods) {
        if (x.dim * l.dim > 36) continue;
        EXPECT_EQ(dim_homs(k, tensor_yd(x, dual_yd(l))), dim_homs(l, x)) << x.dim << " " << l.dim;
      }
  }
}

TEST(Restriction, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto i = subgroup_inclusion(z4, {0, 2});

  auto two = direct_sum(trivial_yd(z4), trivial_yd(z4));
  EXPECT_EQ(restrict_to(two, i).subspace.dim(), 2u);

  auto r = restrict_to(graded_trivial_action(z4), i);
  EXPECT_EQ(r.subspace, Subspace(Q(), 4, {unit_vec(Q(), 4, 0), unit_vec(Q(), 4, 2)}));
  EXPECT_EQ(r.module.dim, 2u);
  EXPECT_EQ(r.module.base, i.source);
  EXPECT_TRUE(yd_check(r.module).all_pass());

  auto l = coadjoint_quotient(i);
  EXPECT_EQ(restrict_to(l, i).subspace.dim(), l.dim);
}

// X^(B) and the cotensor product agree
TEST(Restriction, CotensorAgrees) {
  Group s3 = Group::symmetric(3);
  auto kg = make_group_algebra(s3, Q());
  for (const auto& sub : {elems(s3, {"e"}), elems(s3, {"e", "(12)"}), elems(s3, {"e", "(123)", "(132)"})}) {
    auto i = subgroup_inclusion(kg, sub);
    for (const auto& x : zoo(kg)) {
      auto r = restrict_to(x, i);
      EXPECT_EQ(r.subspace, r.cotensor);
      EXPECT_TRUE(yd_check(r.module).all_pass());
    }
  }
}

TEST(Induce, Examples) {
  for (const Group& g : {Group::cyclic(4), Group::symmetric(3), Group::dihedral(4)}) {
    auto kg = make_group_algebra(g, Q());
    std::set<std::vector<std::size_t>> subs;
    for (std::size_t a = 0; a < g.order(); ++a) subs.insert(g.generated_subgroup({a}));
    for (const auto& sub : subs) {
      auto i = subgroup_inclusion(kg, sub);
      auto v = induce(trivial_yd(i.source), i);
      EXPECT_EQ(v.dim, g.order() / sub.size());
      EXPECT_TRUE(yd_check(v).all_pass());
      if (g.is_normal(sub)) {
        auto iso = yd_iso_search(v, coadjoint_quotient(i));
        EXPECT_TRUE(iso.has_value()) << g.order() << " " << sub.size();
      }
    }
  }

  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto i = subgroup_inclusion(z4, {0, 2});
  auto iso = yd_iso_search(induce(trivial_yd(i.source), i), coadjoint_quotient(i));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(yd_morphism_check(*iso, induce(trivial_yd(i.source), i), coadjoint_quotient(i)).pass);

  auto s3 = make_group_algebra(Group::symmetric(3), Field::parse("F3"));
  auto triv = subgroup_inclusion(s3, {0});
  auto ind = induce(trivial_yd(triv.source), triv);
  EXPECT_TRUE(yd_iso_search(ind, coadjoint(s3, Matrix::identity(s3->field, 6))).has_value());
}

TEST(Grading, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto comps = grading_components(quotient_map(z4, {0, 2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], Subspace(Q(), 4, {unit_vec(Q(), 4, 0), unit_vec(Q(), 4, 2)}));
  EXPECT_EQ(comps[1], Subspace(Q(), 4, {unit_vec(Q(), 4, 1), unit_vec(Q(), 4, 3)}));

  auto eps = grading_components(quotient_map(z4, {0, 1, 2, 3}));
  ASSERT_EQ(eps.size(), 1u);
  EXPECT_EQ(eps[0].dim(), 4u);

  Group s3g = Group::symmetric(3);
  auto s3 = make_group_algebra(s3g, Q());
  auto a3 = elems(s3g, {"e", "(123)", "(132)"});
  auto sign = grading_components(quotient_map(s3, a3));
  ASSERT_EQ(sign.size(), 2u);
  std::vector<Vec> even;
  for (auto x : a3) even.push_back(unit_vec(Q(), 6, x));
  EXPECT_EQ(sign[0], Subspace(Q(), 6, even));
  EXPECT_EQ(sign[1].dim(), 3u);
}

TEST(Fourier, CyclicTwoOverQ) {
  auto z2 = make_group_algebra(Group::cyclic(2), Q());
  auto ft = fourier_transform({z2, z2, Matrix::identity(Q(), 2)});
  EXPECT_EQ(ft.matrix, ones_matrix({{1, 1}, {1, -1}}, Q()));
}

TEST(Fourier, Errors) {
  auto z2 = make_group_algebra(Group::cyclic(2), Field::parse("Fp(2)"));
  try {
    fourier_transform({z2, z2, Matrix::identity(z2->field, 2)});
    FAIL() << "expected an error";
  } catch (const FourierError& e) {
    EXPECT_EQ(e.kind, FourierError::Kind::order_zero);
    EXPECT_STREQ(e.what(), "|Γ| = 0 in k");
  }
  auto z3 = make_group_algebra(Group::cyclic(3), Q());
  try {
    fourier_transform({z3, z3, Matrix::identity(Q(), 3)});
    FAIL() << "expected an error";
  } catch (const FourierError& e) {
    EXPECT_EQ(e.kind, FourierError::Kind::missing_roots);
    EXPECT_STREQ(e.what(), "insufficient roots of unity");
  }
  EXPECT_EQ(group_characters(z3).size(), 1u);
}

// for every fixture meeting the hypotheses the transform is an invertible YD morphism
TEST(Fourier, IsomorphismOnFixtures) {
  std::vector<HopfMorphism> ps;
  for (const char* f : {"Q", "F3", "Qi"}) {
    auto z2 = make_group_algebra(Group::cyclic(2), Field::parse(f));
    ps.push_back({z2, z2, Matrix::identity(z2->field, 2)});
  }
  auto z3 = make_group_algebra(Group::cyclic(3), Field::parse("F4"));
  ps.push_back({z3, z3, Matrix::identity(z3->field, 3)});
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Field::parse("Qi"));
  ps.push_back({z4, z4, Matrix::identity(z4->field, 4)});
  ps.push_back(quotient_map(make_group_algebra(Group::cyclic(4, "h"), Q()), {0, 2}));
  Group s3 = Group::symmetric(3);
  ps.push_back(quotient_map(make_group_algebra(s3, Q()), elems(s3, {"e", "(123)", "(132)"})));
  ps.push_back(quotient_map(make_group_algebra(Group::dihedral(4), Field::parse("F3")), Group::dihedral(4).generated_subgroup({1})));

  for (const auto& p : ps) {
    auto ft = fourier_transform(p);
    EXPECT_EQ(ft.source.dim, ft.target.dim);
    auto inv = inverse(ft.matrix);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(*inv * ft.matrix, Matrix::identity(ft.matrix.field(), ft.matrix.rows()));
    EXPECT_TRUE(yd_morphism_check(ft.matrix, ft.source, ft.target).pass);
    EXPECT_TRUE(yd_check(ft.source).all_pass());
    EXPECT_TRUE(yd_check(ft.target).all_pass());
  }
}

TEST(Morphisms, IdentityAndZero) {
  auto fs3 = functions_on(Group::symmetric(3), Q());
  for (const auto& v : zoo(fs3)) {
    EXPECT_TRUE(yd_morphism_check(Matrix::identity(Q(), v.dim), v, v).pass);
    Matrix z(Q(), v.dim, v.dim);
    EXPECT_TRUE(yd_morphism_check(z, v, v).pass);
    EXPECT_FALSE(inverse(z).has_value());
    EXPECT_TRUE(yd_iso_search(v, v).has_value());
  }
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  EXPECT_FALSE(yd_iso_search(graded_trivial_action(z4), coadjoint(z4, Matrix::identity(Q(), 4))).has_value());
}

TEST(Constructors, AllOutputsPassYdCheck) {
  Group s3 = Group::symmetric(3);
  for (HopfPtr a : {make_group_algebra(s3, Field::parse("F2")), functions_on(s3, Field::parse("F3")),
                    functions_on(Group::dihedral(4), Q())}) {
    auto mods = zoo(a);
    mods.push_back(tensor_yd(mods[1], mods.back()));
    mods.push_back(direct_sum(mods[0], mods[1]));
    for (const auto& v : mods) {
      auto r = yd_check(v);
      EXPECT_TRUE(r.all_pass()) << v.dim << " " << r.first_failure();
    }
  }
}
