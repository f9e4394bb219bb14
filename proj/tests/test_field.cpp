#include <gtest/gtest.h>

#include <set>

#include "hgs/field.hpp"
#include "test_util.hpp"

using namespace hgs;

namespace {

// Extended Euclid over F2[x] on bitmask polynomials; independent of the
// table-driven field arithmetic.
unsigned f2_mulmod(unsigned a, unsigned b, unsigned m) {
  unsigned r = 0;
  int dm = 31 - __builtin_clz(m);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> dm & 1) a ^= m;
  }
  return r;
}

unsigned f2_inverse_oracle(unsigned a, unsigned m) {
  auto deg = [](unsigned p) { return p ? 31 - __builtin_clz(p) : -1; };
  unsigned r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 1) {
    unsigned q = 0, rem = r0;
    while (deg(rem) >= deg(r1)) {
      int sh = deg(rem) - deg(r1);
      q ^= 1u << sh;
      rem ^= r1 << sh;
    }
    unsigned prod = 0;
    for (int i = 0; i < 32; ++i)
      if (q >> i & 1) prod ^= s1 << i;
    unsigned s2 = s0 ^ prod;
    s0 = s1;
    s1 = s2;
    r0 = r1;
    r1 = rem;
  }
  return s1;
}

}  // namespace

TEST(Field, PrimeInverse) {
  Field f5 = Field::parse("Fp(5)");
  EXPECT_EQ(f5.from_int(2).inverse(), f5.from_int(3));
  EXPECT_THROW(f5.zero().inverse(), FieldError);
}

TEST(Field, ExtensionInverseMatchesEuclidOracle) {
  Field f4 = Field::parse("Fp(2)[x]/(x^2+x+1)");
  // x has bitmask 0b10, modulus 0b111
  unsigned expected = f2_inverse_oracle(0b10, 0b111);
  EXPECT_EQ(expected, 0b11u);
  EXPECT_EQ(f4.generator().inverse(), f4.parse_element("x+1"));
  EXPECT_EQ(f4.generator().inverse().code(), expected);
  // every nonzero element of F_16 = F2[x]/(x^4+x+1) against the oracle
  Field f16 = Field::parse("Fp(2)[x]/(x^4+x+1)");
  for (unsigned a = 1; a < 16; ++a) {
    unsigned inv = f2_inverse_oracle(a, 0b10011);
    EXPECT_EQ(f2_mulmod(a, inv, 0b10011), 1u);
    EXPECT_EQ(f16.from_code(a).inverse().code(), inv);
  }
}

TEST(Field, RationalAdd) {
  Field q = Field::parse("Q");
  EXPECT_EQ(q.parse_element("1/2") + q.parse_element("1/3"), q.parse_element("5/6"));
  EXPECT_EQ((q.parse_element("1/2") + q.parse_element("1/3")).to_string(), "5/6");
}

TEST(Field, MismatchThrows) {
  Field q = Field::parse("Q");
  Field f3 = Field::parse("F3");
  EXPECT_THROW(q.one() + f3.one(), FieldError);
}

TEST(Field, ParsingAndAliases) {
  EXPECT_EQ(Field::parse("F4"), Field::parse("Fp(2)[x]/(x^2+x+1)"));
  EXPECT_EQ(Field::parse("Qi"), Field::parse("Q[x]/(x^2+1)"));
  EXPECT_EQ(Field::parse("F3"), Field::parse("Fp(3)"));
  EXPECT_EQ(Field::parse("Q[x]/(x^2+1)").to_string(), "Q[x]/(x^2+1)");
  EXPECT_THROW(Field::parse("Fp(4)"), FieldError);
  EXPECT_THROW(Field::parse("Fp(2)[x]/(x^2+1)"), FieldError);   // (x+1)^2
  EXPECT_THROW(Field::parse("Q[x]/(x^2-1)"), FieldError);       // rational root
  EXPECT_THROW(Field::parse("Q[x]/(x^2+2*x+1)"), FieldError);   // not squarefree
  EXPECT_THROW(Field::parse("Fp(2)[x]/(x^4+x^2+1)"), FieldError);  // (x^2+x+1)^2
  EXPECT_THROW(Field::parse("R"), FieldError);
  Field big = Field::parse("Q[x]/(x^4+1)");
  EXPECT_FALSE(big.irreducibility_verified());
  EXPECT_TRUE(Field::parse("Qi").irreducibility_verified());
}

TEST(Field, ElementRoundTrip) {
  for (const char* spec : {"Q", "Fp(7)", "F4", "Qi", "Q[x]/(x^3-2)", "Fp(3)[x]/(x^2+1)"}) {
    Field f = Field::parse(spec);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      Scalar s = testutil::random_scalar(f, rng);
      EXPECT_EQ(f.parse_element(s.to_string()), s) << spec << " " << s.to_string();
    }
  }
}

TEST(Field, AxiomsOnRandomTriples) {
  for (const char* spec : {"Q", "Fp(5)", "Fp(2)[x]/(x^2+x+1)", "Q[x]/(x^2+1)", "Fp(3)[x]/(x^2+1)", "Fp(101)"}) {
    Field f = Field::parse(spec);
    std::mt19937_64 rng(12345);
    const Scalar zero = f.zero(), one = f.one();
    for (int i = 0; i < 1000; ++i) {
      Scalar a = testutil::random_scalar(f, rng), b = testutil::random_scalar(f, rng),
             c = testutil::random_scalar(f, rng);
      ASSERT_EQ((a + b) + c, a + (b + c)) << spec;
      ASSERT_EQ((a * b) * c, a * (b * c)) << spec;
      ASSERT_EQ(a * (b + c), a * b + a * c) << spec;
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a * one, a);
      ASSERT_EQ(a + (-a), zero);
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), one) << spec << " " << a.to_string();
      }
    }
  }
}

TEST(Field, RootsOfUnity) {
  Field f4 = Field::parse("Fp(2)[x]/(x^2+x+1)");
  auto r = nth_roots_of_unity(f4, 3);
  // exhaustive oracle over the 4 elements
  std::set<std::string> expect;
  for (std::uint64_t c = 0; c < 4; ++c) {
    Scalar z = f4.from_code(c);
    if (z * z * z == f4.one()) expect.insert(z.to_string());
  }
  std::set<std::string> got;
  for (auto& z : r) got.insert(z.to_string());
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got, (std::set<std::string>{"1", "x", "x+1"}));

  Field q = Field::parse("Q");
  auto rq = nth_roots_of_unity(q, 2);
  ASSERT_EQ(rq.size(), 2u);
  EXPECT_EQ(std::set<std::string>({rq[0].to_string(), rq[1].to_string()}), (std::set<std::string>{"1", "-1"}));
  EXPECT_EQ(nth_roots_of_unity(q, 3).size(), 1u);

  Field f2 = Field::parse("Fp(2)");
  auto r2 = nth_roots_of_unity(f2, 2);
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_TRUE(r2[0].is_one());

  Field qi = Field::parse("Qi");
  EXPECT_EQ(nth_roots_of_unity(qi, 4).size(), 4u);
  EXPECT_EQ(nth_roots_of_unity(qi, 3).size(), 1u);
  Field q3 = Field::parse("Q[x]/(x^2+x+1)");
  EXPECT_EQ(nth_roots_of_unity(q3, 3).size(), 3u);
  EXPECT_EQ(nth_roots_of_unity(q3, 6).size(), 6u);
  for (auto& z : nth_roots_of_unity(q3, 6)) EXPECT_TRUE(z.pow(6).is_one());
}

TEST(Field, MultiplicativeOrder) {
  Field f4 = Field::parse("F4");
  EXPECT_EQ(multiplicative_order(f4.generator()), 3u);
  Field qi = Field::parse("Qi");
  EXPECT_EQ(multiplicative_order(qi.generator()), 4u);
  EXPECT_EQ(multiplicative_order(qi.from_int(2)), 0u);
}
