#include <gtest/gtest.h>

#include "cubic/catalog.hpp"
#include "cubic/surface.hpp"
#include "cubic/text_format.hpp"
#include "cubic/weyl.hpp"

namespace cubic {
namespace {

TEST(WeylTest, IncidenceModel) {
  const Graph& g = incidence_model();
  for (int v = 0; v < 27; ++v) EXPECT_EQ(g.degree(v), 10) << label_name(v);
  EXPECT_EQ(g.triangles().size(), 45u);
  EXPECT_TRUE(g.has_edge(label_e(1), label_c(6)));
  EXPECT_TRUE(g.has_edge(label_e(1), label_l(1, 6)));
  EXPECT_TRUE(g.has_edge(label_c(6), label_l(1, 6)));
  EXPECT_FALSE(g.has_edge(label_e(1), label_c(1)));
  EXPECT_TRUE(g.has_edge(label_l(1, 2), label_l(3, 4)));
  EXPECT_FALSE(g.has_edge(label_l(1, 2), label_l(1, 3)));
  for (int v = 0; v < 27; ++v) EXPECT_EQ(label_from_name(label_name(v)), v);
  EXPECT_EQ(label_name(26), "L56");
}

TEST(WeylTest, GroupOrder) {
  const auto& grp = automorphism_group();
  EXPECT_EQ(grp.size(), 51840u);
  int stab = 0;
  std::uint32_t orbit = 0;
  for (const auto& p : grp) {
    ASSERT_TRUE(is_automorphism(p));
    bool fixes_e = true;
    for (int i = 0; i < 6; ++i) fixes_e = fixes_e && p[i] < 6;
    stab += fixes_e;
    orbit |= 1u << p[0];
  }
  EXPECT_EQ(stab, 720);
  EXPECT_EQ(orbit, (1u << 27) - 1);
}

TEST(WeylTest, FixedCounts) {
  EXPECT_EQ(possible_fixed_counts(), (std::set<int>{0, 1, 2, 3, 5, 7, 9, 15, 27}));
  std::set<int> elementwise;
  for (const auto& p : automorphism_group()) elementwise.insert(__builtin_popcount(fixed_set(p)));
  for (int c : elementwise) EXPECT_TRUE(possible_fixed_counts().count(c));
}

TEST(WeylTest, Transversals) {
  const auto t = transversals_of_four_skew({label_e(1), label_e(2), label_e(3), label_e(6)});
  EXPECT_EQ(std::set<int>(t.begin(), t.end()), (std::set<int>{label_c(4), label_c(5)}));
  EXPECT_THROW(transversals_of_four_skew({label_e(1), label_c(2), label_e(3), label_e(4)}), std::invalid_argument);
}

TEST(WeylTest, DoubleSixes) {
  const auto ds = double_sixes();
  EXPECT_EQ(ds.size(), 36u);
  const auto d = double_six_of(label_e(1), label_c(1));
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(d.a[i], label_e(i + 1));
    EXPECT_EQ(d.b[i], label_c(i + 1));
  }
  const auto d2 = double_six_of(label_e(1), label_e(2));
  const Graph& g = incidence_model();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) EXPECT_EQ(g.has_edge(d2.a[i], d2.b[j]), i != j);
  EXPECT_THROW(double_six_of(label_e(1), label_c(2)), std::invalid_argument);
}

TEST(WeylTest, SteinerCompletion) {
  const Graph& g = incidence_model();
  const std::array<int, 3> t1{label_e(1), label_c(2), label_l(1, 2)};
  const std::array<int, 3> t2{label_e(3), label_c(4), label_l(3, 4)};
  const auto grid = steiner_complete(t1, t2);
  std::uint32_t all = 0;
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(g.has_edge(grid[i][0], grid[i][1]) && g.has_edge(grid[i][0], grid[i][2]) &&
                g.has_edge(grid[i][1], grid[i][2]));
    for (int j = 0; j < 3; ++j) all |= 1u << grid[i][j];
  }
  EXPECT_EQ(__builtin_popcount(all), 9);
  EXPECT_TRUE(g.has_edge(grid[0][2], grid[1][2]) && g.has_edge(grid[0][2], grid[2][2]) &&
              g.has_edge(grid[1][2], grid[2][2]));
  EXPECT_THROW(steiner_complete(t1, t1), std::invalid_argument);
}

TEST(WeylTest, FrobeniusIsAnAutomorphism) {
  for (const auto& s : f4_surfaces()) {
    SCOPED_TRACE(s.equation);
    auto k = parse_field(s.field).finite;
    const auto ls = all_27_lines(k, parse_cubic(*k, s.equation));
    const auto iso = graph_isomorphism(intersection_graph(*ls.ext, ls.lines), incidence_model());
    ASSERT_TRUE(iso.has_value());
    const auto frob = frobenius_action(ls);
    Perm27 p{};
    for (int i = 0; i < 27; ++i) p[(*iso)[i]] = static_cast<std::uint8_t>((*iso)[frob[i]]);
    EXPECT_TRUE(is_automorphism(p));
    EXPECT_EQ(__builtin_popcount(fixed_set(p)), s.lines);
  }
}

}  // namespace
}  // namespace cubic
