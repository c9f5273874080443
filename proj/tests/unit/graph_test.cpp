#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cubic/catalog.hpp"
#include "cubic/graph.hpp"
#include "cubic/surface.hpp"
#include "cubic/text_format.hpp"

namespace cubic {
namespace {

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

TEST(GraphTest, Permissible) {
  EXPECT_TRUE(is_permissible(complete_graph(3)));
  EXPECT_TRUE(is_permissible(friendship_graph(2)));
  // K4: every edge lies in two triangles
  EXPECT_FALSE(is_permissible(complete_graph(4)));
  EXPECT_FALSE(is_permissible(empty_graph(3)));
  EXPECT_TRUE(is_permissible(empty_graph(2)));
  EXPECT_FALSE(is_permissible(path3()));
}

TEST(GraphTest, CatalogSmallOrders) {
  const std::vector<Graph> expected[] = {
      {empty_graph(1)},
      {empty_graph(2)},
      {complete_graph(3)},
      {graph_union(complete_graph(3), empty_graph(1))},
      {friendship_graph(2)},
      {graph_union(complete_graph(3), complete_graph(3))},
  };
  for (int n = 1; n <= 6; ++n) {
    SCOPED_TRACE(n);
    const auto cat = permissible_catalog(n);
    ASSERT_EQ(cat.size(), 1u);
    EXPECT_TRUE(graph_isomorphic(cat[0], expected[n - 1][0]));
  }
  EXPECT_TRUE(permissible_catalog(7).empty());
}

TEST(GraphTest, OrderSevenLemma) {
  EXPECT_GT(check_order7_triangle_lemma(), 0);
}

TEST(GraphTest, IsomorphismUnderRelabeling) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 8;
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) g.add_edge(i, j);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabeled(g, perm);
    const auto iso = graph_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(g.has_edge(i, j), h.has_edge((*iso)[i], (*iso)[j]));
  }
  EXPECT_FALSE(graph_isomorphic(complete_graph(3), path3()));
}

TEST(GraphTest, IntersectionGraphs) {
  const auto& Q = RationalField::instance();
  const auto f = parse_cubic(Q, fermat_equation());
  const auto l1 = LineP3<RationalField>::from_equations(Q, {1, 1, 0, 0}, {0, 0, 1, 1});
  const auto l2 = LineP3<RationalField>::from_equations(Q, {1, 0, 1, 0}, {0, 1, 0, 1});
  const auto l3 = residual_line(Q, f, l1, l2);
  EXPECT_EQ(intersection_graph(Q, std::vector{l1, l2, l3}), complete_graph(3));

  for (const auto& s : f4_surfaces()) {
    auto k = parse_field(s.field).finite;
    const auto ls = rational_lines(k, parse_cubic(*k, s.equation));
    const Graph g = intersection_graph(*k, ls.lines);
    EXPECT_TRUE(is_permissible(g) || s.lines > 6);
    if (s.lines == 2) EXPECT_EQ(g, empty_graph(2));
    if (s.lines == 7) EXPECT_TRUE(graph_isomorphic(g, friendship_graph(3)));
  }
}

TEST(GraphTest, Serialization) {
  const std::string js = graph_json(complete_graph(3));
  EXPECT_NE(js.find("\"edges\""), std::string::npos);
  EXPECT_NE(graph_dot(complete_graph(3)).find("0 -- 1"), std::string::npos);
}

}  // namespace
}  // namespace cubic
