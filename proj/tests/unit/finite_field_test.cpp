#include <gtest/gtest.h>

#include <random>

#include "cubic/factor.hpp"
#include "cubic/finite_field.hpp"

namespace cubic {
namespace {

TEST(FiniteFieldTest, DefaultModuli) {
  EXPECT_EQ(FiniteField::get(2, 2)->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::get(2, 3)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_EQ(FiniteField::get(2, 4)->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(FiniteField::get(2, 5)->modulus(), (std::vector<std::uint64_t>{1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(FiniteField::get(3, 2)->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(FiniteField::get(2, 4)->header(), "GF(2^4; modulus=x^4+x+1)");
}

void check_axioms(const FiniteField& k, int samples) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < samples; ++i) {
    const auto a = rng() % k.order(), b = rng() % k.order(), c = rng() % k.order();
    EXPECT_EQ(k.mul(a, k.mul(b, c)), k.mul(k.mul(a, b), c));
    EXPECT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
    EXPECT_EQ(k.add(a, k.add(b, c)), k.add(k.add(a, b), c));
    EXPECT_EQ(k.sub(k.add(a, b), b), a);
    if (a != 0) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
    EXPECT_EQ(k.frobenius(a, k.degree()), a);
  }
}

TEST(FiniteFieldTest, AxiomsTablesAndSlowPath) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 4}, {2, 5}, {3, 2}, {5, 1},
                                                        {7, 3}, {2, 24}, {5, 12}, {3, 20}, {2, 48}})
    check_axioms(*FiniteField::get(p, n), 200);
}

TEST(FiniteFieldTest, TraceIsSurjectiveWithHalfKernel) {
  for (int d = 1; d <= 6; ++d) {
    auto k = FiniteField::get(2, d);
    std::uint64_t zeros = 0;
    for (std::uint64_t a = 0; a < k->order(); ++a) {
      ASSERT_LT(k->trace(a), 2u);
      if (k->trace(a) == 0) ++zeros;
      for (std::uint64_t b = 0; b < k->order(); b += 3) EXPECT_EQ(k->trace(k->add(a, b)), k->trace(a) ^ k->trace(b));
    }
    EXPECT_EQ(zeros, k->order() / 2);
  }
}

TEST(FactorTest, SmallCases) {
  auto f2 = FiniteField::get(2, 1);
  FqPoly f(*f2, {1, 1, 1});
  EXPECT_TRUE(is_irreducible(f));
  auto fac = factor(f);
  ASSERT_EQ(fac.factors.size(), 1u);
  auto f4 = FiniteField::get(2, 2);
  const auto a = f4->gen();
  EXPECT_TRUE(is_irreducible(FqPoly(*f4, {a, 1, 1})));
  EXPECT_FALSE(is_irreducible(FqPoly(*f4, {0, 0, 1})));
}

TEST(FactorTest, RandomRemultiply) {
  std::mt19937_64 rng(11);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 1}, {5, 1}, {3, 2}, {2, 20}}) {
    auto k = FiniteField::get(p, n);
    for (int it = 0; it < 60; ++it) {
      std::vector<std::uint64_t> c(1 + rng() % 10);
      for (auto& x : c) x = rng() % k->order();
      c.push_back(1 + rng() % (k->order() - 1));
      FqPoly f(*k, c);
      auto fac = factor(f);
      EXPECT_EQ(fac.product(), f);
      for (auto& [g, m] : fac.factors) EXPECT_TRUE(is_irreducible(g));
    }
  }
}

}  // namespace
}  // namespace cubic
