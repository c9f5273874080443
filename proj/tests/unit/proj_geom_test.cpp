#include <gtest/gtest.h>

#include <set>

#include "cubic/proj_geom.hpp"
#include "cubic/rational.hpp"

namespace cubic {
namespace {

const RationalField& Q() { return RationalField::instance(); }

ProjPoint<RationalField> twisted(long t) {
  return ProjPoint<RationalField>::make(Q(), {1, t, t * t * t});
}

TEST(ProjGeomTest, LineCounts) {
  EXPECT_EQ(enumerate_lines_p3(*FiniteField::get(2, 1)).size(), 35u);
  EXPECT_EQ(enumerate_lines_p3(*FiniteField::get(3, 1)).size(), 130u);
  EXPECT_EQ(enumerate_lines_p3(*FiniteField::get(2, 2)).size(), 357u);
  EXPECT_EQ(enumerate_lines_p3(*FiniteField::get(5, 1)).size(), line_count_p3(5));
}

TEST(ProjGeomTest, LinesMatchPointPairSpans) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
    auto k = FiniteField::get(p, n);
    const auto pts = projective_points(*k, 3);
    std::set<std::array<std::array<std::uint64_t, 4>, 2>> spans;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        spans.insert(LineP3<FiniteField>::span(*k, pts[i], pts[j]).rows);
    const auto lines = enumerate_lines_p3(*k);
    ASSERT_EQ(lines.size(), spans.size());
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) EXPECT_TRUE(line_less(*k, lines[i], lines[i + 1]));
    for (const auto& l : lines) EXPECT_TRUE(spans.count(l.rows));
  }
}

TEST(ProjGeomTest, PointsPerLine) {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto k = FiniteField::get(p, n);
    const std::uint64_t q = k->order();
    EXPECT_EQ(projective_points(*k, 3).size(), q * q * q + q * q + q + 1);
    for_each_line_p3(*k, [&](const LineP3<FiniteField>& l) {
      std::set<Vec<FiniteField>> s;
      for (const auto& v : rational_points(*k, l)) {
        auto c = ProjPoint<FiniteField>::make(*k, v).c;
        EXPECT_TRUE(point_on_line(*k, c, l));
        s.insert(c);
      }
      EXPECT_EQ(s.size(), q + 1);
    });
  }
}

TEST(ProjGeomTest, TwistedCubicPositions) {
  EXPECT_TRUE(collinear(Q(), twisted(1), twisted(2), twisted(-3)));
  EXPECT_FALSE(collinear(Q(), twisted(0), twisted(1), twisted(2)));
  EXPECT_TRUE(on_common_conic(Q(), {twisted(1), twisted(2), twisted(3), twisted(-1), twisted(-2), twisted(-3)}));
  EXPECT_FALSE(on_common_conic(Q(), {twisted(1), twisted(2), twisted(3), twisted(-1), twisted(-2), twisted(4)}));
  EXPECT_THROW(collinear(Q(), twisted(1), twisted(1), twisted(2)), std::invalid_argument);
}

TEST(ProjGeomTest, Meets) {
  using L = LineP3<RationalField>;
  const L e1 = L::from_equations(Q(), {1, 0, 0, 0}, {0, 1, 0, 0});
  const L e2 = L::from_equations(Q(), {0, 0, 1, 0}, {0, 0, 0, 1});
  EXPECT_EQ(lines_meet(Q(), e1, e2).kind, Meet::kSkew);
  const L a = L::from_equations(Q(), {1, 1, 0, 0}, {0, 0, 1, 1});
  const L b = L::from_equations(Q(), {1, 0, 1, 0}, {0, 1, 0, 1});
  auto m = lines_meet(Q(), a, b);
  ASSERT_EQ(m.kind, Meet::kMeet);
  EXPECT_EQ(m.point->c, (Vec<RationalField>{1, -1, -1, 1}));
  EXPECT_EQ(lines_meet(Q(), a, a).kind, Meet::kIdentical);
  EXPECT_FALSE(lines_intersect(Q(), a, a));
}

TEST(ProjGeomTest, MeetSymmetricWithCommonPoint) {
  auto k = FiniteField::get(3, 1);
  const auto lines = enumerate_lines_p3(*k);
  for (std::size_t i = 0; i < lines.size(); i += 7)
    for (std::size_t j = 0; j < lines.size(); j += 5) {
      auto ab = lines_meet(*k, lines[i], lines[j]);
      auto ba = lines_meet(*k, lines[j], lines[i]);
      EXPECT_EQ(ab.kind, ba.kind);
      if (ab.kind == Meet::kMeet) {
        EXPECT_TRUE(point_on_line(*k, ab.point->c, lines[i]));
        EXPECT_TRUE(point_on_line(*k, ab.point->c, lines[j]));
      }
    }
}

}  // namespace
}  // namespace cubic
