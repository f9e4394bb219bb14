#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hgs/hopf.hpp"
#include "hgs/yd.hpp"
#include "test_util.hpp"

using namespace hgs;

namespace {

Field Q() { return Field::rationals(); }

std::vector<std::size_t> elems(const Group& g, std::initializer_list<const char*> names) {
  std::vector<std::size_t> out;
  for (auto n : names) out.push_back(g.find(n));
  return out;
}

// every subgroup of g, by brute force over generating pairs
std::vector<std::vector<std::size_t>> all_subgroups(const Group& g) {
  std::set<std::vector<std::size_t>> subs;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a; b < g.order(); ++b) subs.insert(g.generated_subgroup({a, b}));
  return {subs.begin(), subs.end()};
}

}  // namespace

TEST(Group, RejectsNonGroupTables) {
  EXPECT_THROW(Group::from_table({{0, 0}, {0, 1}}), GroupError);
  EXPECT_THROW(Group::from_table({{0, 1}, {1, 1}}), GroupError);
  EXPECT_THROW(Group::from_table({{0, 2}, {1, 0}}), GroupError);
  EXPECT_NO_THROW(Group::from_table({{0, 1}, {1, 0}}));
}

TEST(Group, Builtins) {
  EXPECT_EQ(Group::symmetric(3).order(), 6u);
  EXPECT_EQ(Group::symmetric(4).order(), 24u);
  EXPECT_EQ(Group::dihedral(4).order(), 8u);
  EXPECT_FALSE(Group::symmetric(3).is_abelian());
  EXPECT_TRUE(Group::cyclic(6).is_abelian());
  EXPECT_EQ(Group::symmetric(3).exponent(), 6u);
  Group s3 = Group::symmetric(3);
  EXPECT_TRUE(s3.is_normal(elems(s3, {"e", "(123)", "(132)"})));
  EXPECT_FALSE(s3.is_normal(elems(s3, {"e", "(12)"})));
  EXPECT_THROW(Group::symmetric(5), GroupError);
}

TEST(GroupAlgebra, Examples) {
  auto z2 = group_algebra(Group::cyclic(2), Field::parse("Fp(2)"));
  EXPECT_EQ(z2.dim, 2u);
  EXPECT_EQ(z2.antipode, Matrix::identity(z2.field, 2));

  auto s3 = group_algebra(Group::symmetric(3), Field::parse("Fp(3)"));
  EXPECT_EQ(s3.dim, 6u);
  for (const auto& e : s3.counit) EXPECT_TRUE(e.is_one());

  auto z4 = group_algebra(Group::cyclic(4, "h"), Q());
  for (std::size_t k = 0; k < 4; ++k) {
    Vec expect = zero_vec(Q(), 16);
    expect[k * 4 + k] = Q().one();
    EXPECT_EQ(z4.comul(z4.basis(k)), expect);
  }
}

TEST(GroupAlgebra, EveryBuiltinPassesAxioms) {
  std::vector<Group> groups = {Group::cyclic(1), Group::cyclic(2), Group::cyclic(5), Group::dihedral(3),
                               Group::dihedral(4), Group::symmetric(3)};
  for (const char* spec : {"Q", "F2", "F3", "F4"})
    for (const auto& g : groups) {
      auto h = group_algebra(g, Field::parse(spec));
      auto r = check_hopf_axioms(h);
      EXPECT_TRUE(r.all_pass()) << spec << " " << g.order() << " " << r.first_failure();
      auto d = dual_hopf(h);
      EXPECT_TRUE(check_hopf_axioms(d).all_pass()) << spec << " dual " << g.order();
    }
}

TEST(DualHopf, DoubleDualIsOriginal) {
  auto h = group_algebra(Group::symmetric(3), Q());
  auto dd = dual_hopf(dual_hopf(h));
  EXPECT_EQ(dd.mult, h.mult);
  EXPECT_EQ(dd.comult, h.comult);
  EXPECT_EQ(dd.unit, h.unit);
  EXPECT_EQ(dd.counit, h.counit);
  EXPECT_EQ(dd.antipode, h.antipode);
}

TEST(DualHopf, CyclicTwoIsSelfDualViaCharacterMatrix) {
  auto h = group_algebra(Group::cyclic(2), Q());
  auto d = dual_hopf(h);
  Matrix c(Q(), 2, 2);
  c(0, 0) = Q().from_int(1);
  c(0, 1) = Q().from_int(1);
  c(1, 0) = Q().from_int(1);
  c(1, 1) = Q().from_int(-1);
  auto r = morphism_check(c, h, d);
  EXPECT_TRUE(r.all_pass()) << r.first_failure();
  EXPECT_TRUE(inverse(c).has_value());
}

TEST(DualHopf, FunctionsOnS3AreCommutativeNotCocommutative) {
  auto d = dual_hopf(group_algebra(Group::symmetric(3), Q()));
  const std::size_t n = d.dim;
  bool commutative = true, cocommutative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) commutative &= d.mult[i * n + j] == d.mult[j * n + i];
  for (std::size_t k = 0; k < n; ++k) {
    Vec x = d.comul(d.basis(k)), flipped = zero_vec(Q(), n * n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) flipped[t * n + s] = x[s * n + t];
    cocommutative &= x == flipped;
  }
  EXPECT_TRUE(commutative);
  EXPECT_FALSE(cocommutative);
}

TEST(HopfAxioms, IdentityAntipodeFailsWithWitness) {
  auto h = group_algebra(Group::cyclic(3), Field::parse("Fp(2)[x]/(x^2+x+1)"));
  h.antipode = Matrix::identity(h.field, 3);
  auto r = check_hopf_axioms(h);
  ASSERT_FALSE(r.find("antipode")->pass);
  EXPECT_EQ(r.find("antipode")->witness, "(g)");
  EXPECT_TRUE(r.find("associativity")->pass);
}

TEST(HopfAxioms, BrokenComultiplication) {
  auto h = group_algebra(Group::cyclic(2), Q());
  h.comult[1] = {{1 * 2 + 0, Q().one()}};  // Delta(g) = g (x) 1
  auto r = check_hopf_axioms(h);
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.find("counit")->pass);
  EXPECT_EQ(r.find("counit")->witness, "(g)");
}

TEST(Morphism, Examples) {
  auto z4 = make_group_algebra(Group::cyclic(4, "h"), Q());
  auto z2 = make_group_algebra(Group::cyclic(2), Q());
  EXPECT_TRUE(morphism_check(Matrix::identity(Q(), 4), *z4, *z4).all_pass());
  auto red = group_algebra_map(z4, z2, {0, 1, 0, 1});
  auto r = morphism_check(red.map, *z4, *z2);
  EXPECT_TRUE(r.all_pass()) << r.first_failure();
  auto bad = group_algebra_map(z2, z4, {0, 1});
  auto rb = morphism_check(bad.map, *z2, *z4);
  EXPECT_FALSE(is_hopf_morphism(rb));
  EXPECT_FALSE(rb.find("multiplicative")->pass);
  EXPECT_EQ(rb.find("multiplicative")->witness, "(g, g)");
}

TEST(Cocentral, Examples) {
  Group s3g = Group::symmetric(3);
  auto s3 = make_group_algebra(s3g, Q());
  auto sign = quotient_map(s3, elems(s3g, {"e", "(123)", "(132)"}));
  EXPECT_TRUE(cocentral_check(sign).pass);

  // restriction k^{S3} -> k^{Z2} along <(12)> -> S3
  auto inc = subgroup_inclusion(s3, elems(s3g, {"e", "(12)"}));
  auto fs3 = std::make_shared<const FinDimHopf>(dual_hopf(*s3));
  auto fz2 = std::make_shared<const FinDimHopf>(dual_hopf(*inc.source));
  HopfMorphism res{fs3, fz2, inc.map.transpose()};
  EXPECT_TRUE(is_hopf_morphism(morphism_check(res.map, *fs3, *fz2)));
  auto c = cocentral_check(res);
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.witness.empty());

  // counit onto the trivial group algebra k
  auto k = make_group_algebra(Group::cyclic(1), Q());
  Matrix eps(Q(), 1, 6);
  for (std::size_t j = 0; j < 6; ++j) eps(0, j) = fs3->counit[j];
  EXPECT_TRUE(is_hopf_morphism(morphism_check(eps, *fs3, *k)));
  EXPECT_TRUE(cocentral_check(eps, *fs3).pass);
}

TEST(ExactSequence, Examples) {
  Group z4g = Group::cyclic(4, "h");
  auto z4 = make_group_algebra(z4g, Q());
  auto i = subgroup_inclusion(z4, {0, 2});
  auto p = quotient_map(z4, {0, 2});
  auto w = verify_exact_sequence(i, p);
  EXPECT_TRUE(w.cond1 && w.cond2 && w.cond3);
  EXPECT_TRUE(w.pi_is_counit);

  Group s3g = Group::symmetric(3);
  auto s3 = make_group_algebra(s3g, Field::parse("F3"));
  auto n = elems(s3g, {"e", "(123)", "(132)"});
  auto w2 = verify_exact_sequence(subgroup_inclusion(s3, n), quotient_map(s3, n));
  EXPECT_TRUE(w2.all());

  auto j = subgroup_inclusion(s3, elems(s3g, {"e", "(12)"}));
  auto l = quotient_by_subalgebra(j);
  EXPECT_EQ(l.dim, 3u);
  EXPECT_FALSE(l.hopf.has_value());
  auto w3 = verify_exact_sequence(j, l.proj);
  EXPECT_TRUE(w3.cond1);
  EXPECT_FALSE(w3.cond2);
  EXPECT_NE(w3.bplus_a, w3.a_bplus);
}

// Property: for every subgroup N of the fixture groups, the sequence
// kN -> kG -> kG/kN^+kG is exact iff N is normal (group-theoretic oracle),
// and condition (2) forces p i = eps 1.
TEST(ExactSequence, NormalityOracle) {
  for (const Group& g : {Group::cyclic(4), Group::cyclic(6), Group::symmetric(3), Group::dihedral(4)}) {
    auto kg = make_group_algebra(g, Q());
    for (const auto& sub : all_subgroups(g)) {
      auto i = subgroup_inclusion(kg, sub);
      auto q = quotient_by_subalgebra(i);
      auto w = verify_exact_sequence(i, q.proj);
      bool normal = g.is_normal(sub);
      EXPECT_EQ(w.all(), normal) << g.order() << " sub of order " << sub.size();
      EXPECT_EQ(q.hopf.has_value(), normal);
      if (!normal) {
        EXPECT_TRUE(!w.cond2 || !w.cond3);
      }
      if (w.cond2) {
        EXPECT_TRUE(w.pi_is_counit);
      }
      if (normal) {
        auto w2 = verify_exact_sequence(i, quotient_map(kg, sub));
        EXPECT_TRUE(w2.all());
        EXPECT_TRUE(check_hopf_axioms(*q.hopf).all_pass());
      }
    }
  }
}

TEST(DrinfeldDouble, DimensionAndAlgebraAxioms) {
  std::vector<FinDimHopf> hs = {group_algebra(Group::cyclic(2), Field::parse("F2")),
                                group_algebra(Group::symmetric(3), Q()),
                                dual_hopf(group_algebra(Group::symmetric(3), Q())),
                                group_algebra(Group::cyclic(6), Field::parse("F4"))};
  for (const auto& h : hs) {
    auto d = drinfeld_double(h);
    EXPECT_EQ(d.algebra.dim, h.dim * h.dim);
    auto r = check_algebra_axioms(d.algebra);
    EXPECT_TRUE(r.all_pass()) << r.first_failure();
  }
}

TEST(DrinfeldDouble, AbelianGroupGivesTensorProduct) {
  for (const Group& g : {Group::cyclic(4), Group::cyclic(6)}) {
    auto h = group_algebra(g, Q());
    auto d = drinfeld_double(h);
    auto f = dual_hopf(h);
    const std::size_t n = h.dim;
    // componentwise product in k^G (x) kG
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m)
          for (std::size_t k = 0; k < n; ++k) {
            SparseVec expect;
            for (const auto& [q, x] : f.mult[l * n + m])
              for (const auto& [w, y] : h.mult[j * n + k]) expect.emplace_back(q * n + w, x * y);
            std::sort(expect.begin(), expect.end(), [](auto& a, auto& b) { return a.first < b.first; });
            ASSERT_EQ(d.algebra.mult[(l * n + j) * n * n + m * n + k], expect);
          }
  }
}

namespace {

Matrix random_invertible(Field f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = testutil::random_matrix(f, n, n, rng);
    if (inverse(m)) return m;
  }
}

YDModule conjugate(const YDModule& v, const Matrix& p) {
  Matrix pinv = *inverse(p);
  YDModule out = v;
  for (auto& m : out.act) m = p * m * pinv;
  for (auto& m : out.co) m = p * m * pinv;
  return out;
}

}  // namespace

// The YD axioms hold iff the translated action is a module over the double.
TEST(DrinfeldDouble, YdIffDoubleModuleRandomized) {
  std::mt19937_64 rng(20240611);
  std::vector<HopfPtr> bases = {
      make_group_algebra(Group::symmetric(3), Field::parse("F3")),
      std::make_shared<const FinDimHopf>(dual_hopf(group_algebra(Group::symmetric(3), Q()))),
      make_group_algebra(Group::cyclic(4, "h"), Q()),
  };
  std::vector<DrinfeldDouble> doubles;
  for (const auto& b : bases) doubles.push_back(drinfeld_double(*b));
  int agree = 0, valid = 0, invalid = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t bi = t % bases.size();
    const auto& a = bases[bi];
    // building blocks: coadjoint of A over the trivial subalgebra, trivial module, k_psi
    std::vector<YDModule> blocks = {trivial_yd(a), coadjoint(a, Matrix::identity(a->field, a->dim))};
    YDModule v = blocks[rng() % blocks.size()];
    if (v.dim < 3 && rng() % 2) v = direct_sum(v, blocks[rng() % blocks.size()]);
    v = conjugate(v, random_invertible(a->field, v.dim, rng));
    if (t % 2 == 1) {
      // perturb one entry of one structure matrix
      auto& mats = rng() % 2 ? v.act : v.co;
      Matrix& m = mats[rng() % mats.size()];
      std::size_t r = rng() % v.dim, c = rng() % v.dim;
      m(r, c) += a->field.one();
    }
    bool yd = yd_check(v).all_pass();
    bool dm = check_module_axioms(doubles[bi].algebra, yd_to_double_module(v, doubles[bi])).all_pass();
    agree += yd == dm;
    (yd ? valid : invalid)++;
    EXPECT_EQ(yd, dm) << "trial " << t;
  }
  EXPECT_EQ(agree, 200);
  EXPECT_GE(valid, 100);
  EXPECT_GT(invalid, 50);
}

// D-modules translate back to YD modules: the regular module of the double.
TEST(DrinfeldDouble, RegularModuleIsYd) {
  auto a = make_group_algebra(Group::symmetric(3), Field::parse("F3"));
  auto d = drinfeld_double(*a);
  auto v = double_module_to_yd(regular_module(d.algebra), a);
  auto r = yd_check(v);
  EXPECT_TRUE(r.all_pass()) << r.first_failure();
  // and the round trip returns the same action matrices
  auto back = yd_to_double_module(v, d);
  EXPECT_EQ(back.act, regular_module(d.algebra).act);
}
