#include <gtest/gtest.h>

#include <random>

#include "cubic/catalog.hpp"
#include "cubic/surface.hpp"

namespace cubic {
namespace {

const RationalField& Q() { return RationalField::instance(); }
using QLine = LineP3<RationalField>;

QLine qline(Vec<RationalField> a, Vec<RationalField> b) { return QLine::from_equations(Q(), a, b); }

TEST(SmoothTest, RationalExamples) {
  EXPECT_TRUE(is_smooth(Q(), parse_cubic(Q(), fermat_equation())));
  const auto cayley = parse_cubic(Q(), "x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3");
  EXPECT_FALSE(is_smooth(Q(), cayley));
  EXPECT_TRUE(evaluate(Q(), cayley, {1, 0, 0, 0}) == 0);
  for (const auto& g : gradient(Q(), cayley, {1, 0, 0, 0})) EXPECT_TRUE(g == 0);
  EXPECT_FALSE(is_smooth(Q(), parse_cubic(Q(), "x0^3")));
  EXPECT_THROW(is_smooth(Q(), CubicForm<RationalField>::zero(Q())), std::invalid_argument);
}

TEST(SmoothTest, CharacteristicThree) {
  auto F3 = FiniteField::get(3, 1);
  // Fermat is a triple plane in characteristic 3
  EXPECT_FALSE(is_smooth(*F3, parse_cubic(*F3, "x0^3+x1^3+x2^3+x3^3")));
  EXPECT_TRUE(is_smooth(*F3, parse_cubic(*F3, "x0^2*x1+x1^2*x2+x2^2*x3+x3^2*x0")));
}

TEST(ContainmentTest, FermatLines) {
  const auto f = parse_cubic(Q(), fermat_equation());
  const auto l1 = qline({1, 1, 0, 0}, {0, 0, 1, 1});
  const auto l2 = qline({1, 0, 1, 0}, {0, 1, 0, 1});
  EXPECT_TRUE(line_in_surface(Q(), f, l1));
  EXPECT_TRUE(line_in_surface(Q(), f, l2));
  EXPECT_FALSE(line_in_surface(Q(), f, qline({1, 0, 0, 0}, {0, 1, 0, 0})));
  const auto l3 = residual_line(Q(), f, l1, l2);
  EXPECT_EQ(l3, qline({1, 0, 0, 1}, {0, 1, 1, 0}));
  EXPECT_EQ(residual_line(Q(), f, l1, l3), l2);
  EXPECT_THROW(residual_line(Q(), f, l1, qline({1, -1, 0, 0}, {0, 0, 1, -1})), std::invalid_argument);
  // meets l1 but is not on the surface
  EXPECT_THROW(residual_line(Q(), f, l1, qline({1, 0, 0, 0}, {0, 1, 0, 0})), std::logic_error);
}

TEST(RationalLinesTest, F4Catalog) {
  for (const auto& s : f4_surfaces()) {
    SCOPED_TRACE(s.equation);
    auto k = parse_field(s.field).finite;
    const auto f = parse_cubic(*k, s.equation);
    const auto ls = rational_lines(k, f);
    EXPECT_EQ(static_cast<int>(ls.lines.size()), s.lines);
  }
}

TEST(RationalLinesTest, RefusesSingular) {
  auto k = FiniteField::get(2, 1);
  EXPECT_THROW(rational_lines(k, parse_cubic(*k, "x0^3")), NotSmoothError);
}

void check_complete(const FieldPtr& k, const CubicForm<FiniteField>& f, int expected_rational) {
  const auto ls = all_27_lines(k, f);
  ASSERT_EQ(ls.lines.size(), 27u);
  const auto& K = *ls.ext;
  const auto fK = map_form(*ls.embedding, f);
  int triples = 0, rational = 0;
  for (int i = 0; i < 27; ++i) {
    EXPECT_TRUE(line_in_surface(K, fK, ls.lines[i]));
    int deg = 0;
    for (int j = 0; j < 27; ++j) deg += lines_intersect(K, ls.lines[i], ls.lines[j]);
    EXPECT_EQ(deg, 10);
    rational += ls.min_degree[i] == 1;
    for (int j = i + 1; j < 27; ++j)
      for (int l = j + 1; l < 27; ++l)
        if (lines_intersect(K, ls.lines[i], ls.lines[j]) && lines_intersect(K, ls.lines[i], ls.lines[l]) &&
            lines_intersect(K, ls.lines[j], ls.lines[l]))
          ++triples;
  }
  EXPECT_EQ(triples, 45);
  EXPECT_EQ(rational, expected_rational);
  const auto type = frobenius_cycle_type(ls);
  int sum = 0;
  for (int c : type) sum += c;
  EXPECT_EQ(sum, 27);
  EXPECT_EQ(fixed_by_power(type, 1), expected_rational);
}

TEST(AllLinesTest, F4Catalog) {
  for (const auto& s : f4_surfaces()) {
    SCOPED_TRACE(s.equation);
    auto k = parse_field(s.field).finite;
    check_complete(k, parse_cubic(*k, s.equation), s.lines);
  }
}

}  // namespace
}  // namespace cubic

namespace cubic {
namespace {

CubicForm<FiniteField> random_form(const FiniteField& k, std::mt19937_64& rng) {
  auto f = CubicForm<FiniteField>::zero(k);
  for (auto& c : f.c) c = rng() % k.order();
  return f;
}

TEST(RationalLinesTest, F8SplitSurface) {
  const auto& s = f8_split_surface();
  auto k = parse_field(s.field).finite;
  const auto f = parse_cubic(*k, s.equation);
  EXPECT_EQ(rational_lines(k, f).lines.size(), 27u);
  int points = 0;
  for (const auto& p : projective_points(*k, 3)) points += k->is_zero(evaluate(*k, f, p));
  EXPECT_GT(points, 105);
}

TEST(AllLinesTest, RationalLinesAreDegreeOneLines) {
  std::mt19937_64 rng(17);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto k = FiniteField::get(p, n);
    int done = 0;
    while (done < 6) {
      const auto f = random_form(*k, rng);
      if (f.is_zero(*k) || !is_smooth(*k, f)) continue;
      const auto ls = all_27_lines(k, f);
      const auto& e = *ls.embedding;
      std::vector<LineP3<FiniteField>> mapped;
      for (const auto& l : rational_lines(k, f).lines) {
        LineP3<FiniteField> m;
        for (int a = 0; a < 2; ++a)
          for (int j = 0; j < 4; ++j) m.rows[a][j] = e(l.rows[a][j]);
        mapped.push_back(m);
      }
      std::vector<LineP3<FiniteField>> deg1;
      for (int i = 0; i < 27; ++i)
        if (ls.min_degree[i] == 1) deg1.push_back(ls.lines[i]);
      std::sort(mapped.begin(), mapped.end(), [&](const auto& x, const auto& y) { return line_less(*ls.ext, x, y); });
      EXPECT_EQ(mapped, deg1);
      ++done;
    }
  }
}

TEST(SmoothTest, InvariantUnderLinearSubstitution) {
  std::mt19937_64 rng(23);
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    auto k = FiniteField::get(p, n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_form(*k, rng);
      if (f.is_zero(*k)) continue;
      Mat<FiniteField> T;
      do {
        T.assign(4, Vec<FiniteField>(4));
        for (auto& row : T)
          for (auto& x : row) x = rng() % k->order();
      } while (rank(*k, T) < 4);
      EXPECT_EQ(is_smooth(*k, f), is_smooth(*k, substitute(*k, f, T)));
    }
  }
}

TEST(ContainmentTest, SetwiseMatchesAlgebraicOverF3) {
  auto k = FiniteField::get(3, 1);
  std::mt19937_64 rng(29);
  const auto lines = enumerate_lines_p3(*k);
  int surfaces = 0;
  while (surfaces < 200) {
    const auto f = random_form(*k, rng);
    if (f.is_zero(*k) || !is_smooth(*k, f)) continue;
    for (const auto& l : lines) ASSERT_EQ(line_in_surface(*k, f, l), line_in_surface_setwise(*k, f, l));
    ++surfaces;
  }
}

TEST(ContainmentTest, SetwiseExceedsAlgebraicOverF2) {
  auto k = FiniteField::get(2, 1);
  // x0^2 x1 + x0 x1^2 vanishes at every F2-point of V(x2, x3)
  const auto f = parse_cubic(*k, "x0^2*x1+x0*x1^2+x2^3+x3^3+x0*x2*x3");
  const auto l = LineP3<FiniteField>::from_equations(*k, {0, 0, 1, 0}, {0, 0, 0, 1});
  EXPECT_TRUE(line_in_surface_setwise(*k, f, l));
  EXPECT_FALSE(line_in_surface(*k, f, l));
}

}  // namespace
}  // namespace cubic

namespace cubic {
namespace {

TEST(AllLinesTest, LinePointPolynomialVanishesOnLines) {
  auto k = FiniteField::get(5, 1);
  std::mt19937_64 rng(41);
  int checked = 0, surfaces = 0;
  while (surfaces < 3) {
    auto f = CubicForm<FiniteField>::zero(*k);
    for (auto& c : f.c) c = rng() % 5;
    if (f.is_zero(*k) || !is_smooth(*k, f)) continue;
    ++surfaces;
    const auto phi = line_point_polynomial(k, f);
    ASSERT_FALSE(phi.is_zero());
    const auto ls = all_27_lines(k, f);
    const auto& K = *ls.ext;
    const auto phiK = ls.embedding->map(phi);
    const auto fK = map_form(*ls.embedding, f);
    for (const auto& l : ls.lines) {
      // meeting point with x3 = 0 and a direction with x0 = 0
      const auto eq = Mat<FiniteField>{l.row(0), l.row(1)};
      auto ker = kernel(K, Mat<FiniteField>{{l.rows[0][3], l.rows[1][3]}}, 2);
      if (ker.size() != 1) continue;  // line inside the plane
      Vec<FiniteField> P(4), Rr(4);
      for (int j = 0; j < 4; ++j) P[j] = K.add(K.mul(ker[0][0], eq[0][j]), K.mul(ker[0][1], eq[1][j]));
      if (K.is_zero(P[0])) continue;
      P = ProjPoint<FiniteField>::make(K, P).c;
      const auto other = rank(K, Mat<FiniteField>{P, l.row(0)}) == 2 ? l.row(0) : l.row(1);
      for (int j = 0; j < 4; ++j) Rr[j] = K.sub(other[j], K.mul(other[0], P[j]));
      if (K.is_zero(Rr[1]) || K.is_zero(gradient(K, fK, P)[3])) continue;
      EXPECT_TRUE(K.is_zero(phiK.eval(P[1])));
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}

}  // namespace
}  // namespace cubic
