#include <gtest/gtest.h>

#include "cubic/blowup.hpp"
#include "cubic/char2.hpp"
#include "cubic/root_conditions.hpp"

namespace cubic {
namespace {

// Number of monic irreducibles of degree d over F_q from the necklace formula.
long long necklace(long long q, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  long long s = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      long long qe = 1;
      for (int i = 0; i < e; ++i) qe *= q;
      s += mobius(d / e) * qe;
    }
  return s / d;
}

TEST(Char2Test, ArtinSchreierComplement) {
  const auto k = gf2(2);
  const Elem2 a = k->gen();
  EXPECT_EQ(artin_schreier_complement(k), (std::vector<Elem2>{a, k->add(a, 1)}));
  for (int d = 3; d <= 5; ++d) {
    const auto kd = gf2(d);
    const auto bs = artin_schreier_complement(kd);
    EXPECT_EQ(bs.size(), std::size_t{1} << (d - 1));
    for (Elem2 b : bs) EXPECT_TRUE(is_irreducible(FqPoly(*kd, {b, 1, 1})));
  }
  EXPECT_THROW(artin_schreier_complement(gf2(1)), std::invalid_argument);
}

TEST(Char2Test, Quartics) {
  const auto k = gf2(3);
  const Elem2 gamma = trace_one_element(k);
  EXPECT_EQ(k->trace(gamma), 1u);
  for (Elem2 b : artin_schreier_complement(k)) {
    const auto cert = build_quartic(k, QuarticVariant::kUnit, b, gamma);
    EXPECT_TRUE(cert.irreducible);
    EXPECT_TRUE(cert.triple_sum_free);
    EXPECT_TRUE(k->is_zero(cert.poly.coeff(3)));
    EXPECT_FALSE(k->is_zero(cert.poly.coeff(0)));
  }
  const Elem2 a = primitive_generator(*k);
  for (Elem2 b : quadratic_complement(k, a)) {
    if (b == k->add(a, 1)) {
      EXPECT_THROW(build_quartic(k, QuarticVariant::kPrimitive, b, gamma), std::invalid_argument);
      continue;
    }
    EXPECT_TRUE(build_quartic(k, QuarticVariant::kPrimitive, b, gamma).irreducible);
  }
  EXPECT_THROW(build_quartic(k, QuarticVariant::kPrimitive, k->add(a, 1), gamma), std::invalid_argument);
  EXPECT_THROW(build_quartic(k, QuarticVariant::kUnit, artin_schreier_complement(k)[0], 0), std::invalid_argument);
}

TEST(Char2Test, CubicConstants) {
  const auto k = gf2(4);
  const Elem2 a = primitive_generator(*k);
  EXPECT_TRUE(is_irreducible(FqPoly(*k, {cubic_constant(k, 1), 0, 1, 1})));
  EXPECT_TRUE(is_irreducible(FqPoly(*k, {cubic_constant(k, a), 0, a, 1})));
}

TEST(Char2Test, QuinticAndSextic) {
  for (int d = 1; d <= 4; ++d) {
    const auto k = gf2(d);
    const auto q5 = quintic_search(k);
    EXPECT_EQ(q5.poly.degree(), 5);
    EXPECT_EQ(q5.poly.coeff(4), 1u);
    EXPECT_TRUE(is_irreducible(q5.poly));
    EXPECT_TRUE(triple_sum_free(q5.poly, k));
    if (d < 2) continue;
    const auto s6 = sextic_search(k);
    const auto& c = s6.poly.coeffs();
    ASSERT_EQ(c.size(), 7u);
    EXPECT_EQ(c[0], 1u);
    EXPECT_EQ(c[1], 1u);
    EXPECT_EQ(c[5], 1u);
    EXPECT_EQ(c[2], c[4]);
    EXPECT_TRUE(is_irreducible(s6.poly));
    EXPECT_TRUE(triple_sum_free(s6.poly, k));
  }
  EXPECT_THROW(sextic_search(gf2(1)), std::invalid_argument);
}

TEST(Char2Test, Counting) {
  const auto f2 = gf2(1);
  EXPECT_EQ(count_irreducibles(f2, 3), 2);
  EXPECT_EQ(count_with_subleading(f2, 3, 0), 1);
  EXPECT_EQ(count_with_subleading(f2, 3, 1), 1);
  const auto f3 = FiniteField::get(3, 1);
  for (Elem2 a = 0; a < 3; ++a) EXPECT_EQ(count_with_subleading(f3, 2, a), 1);
  struct Case { std::uint64_t p; int n, d; };
  for (const auto& c : {Case{2, 1, 3}, Case{2, 2, 3}, Case{3, 1, 2}, Case{2, 1, 5}}) {
    const auto k = FiniteField::get(c.p, c.n);
    const long long total = count_irreducibles(k, c.d);
    EXPECT_EQ(total, necklace(static_cast<long long>(k->order()), c.d));
    for (Elem2 a = 0; a < k->order(); ++a)
      EXPECT_EQ(count_with_subleading(k, c.d, a) * static_cast<long long>(k->order()), total);
  }
  for (int d = 2; d <= 3; ++d) EXPECT_EQ(count_with_subleading(gf2(d), 3, 1), ((1LL << (2 * d)) - 1) / 3);
}

TEST(Char2Test, ShiftLemma) {
  EXPECT_TRUE(check_shift_lemma(gf2(2), 3));
  EXPECT_TRUE(check_shift_lemma(FiniteField::get(3, 1), 4));
  EXPECT_TRUE(check_shift_lemma(FiniteField::get(5, 1), 3));
  EXPECT_THROW(check_shift_lemma(gf2(4), 4), std::length_error);
}

TEST(Char2Test, SexticRecipes) {
  for (int d : {3, 4}) {
    const auto k = gf2(d);
    for (int item = 2; item <= 11; ++item) {
      SCOPED_TRACE(std::to_string(d) + "/" + std::to_string(item));
      const auto b = char2_sextic(k, item);
      const auto chk = check_sextic(b.G, k, pattern_item(item).degrees);
      EXPECT_TRUE(chk.ok()) << chk.failed();
      ASSERT_EQ(b.factors.size(), pattern_item(item).degrees.size());
      for (std::size_t i = 0; i < b.factors.size(); ++i) EXPECT_EQ(b.factors[i].degree(), pattern_item(item).degrees[i]);
    }
  }
  for (int d : {4, 5}) EXPECT_TRUE(check_sextic(char2_sextic(gf2(d), 1).G, gf2(d), pattern_item(1).degrees).ok());
  EXPECT_THROW(char2_sextic(gf2(3), 1), std::domain_error);
  EXPECT_THROW(char2_sextic(gf2(2), 7), std::domain_error);
}

}  // namespace
}  // namespace cubic
