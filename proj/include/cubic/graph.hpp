#ifndef CUBIC_GRAPH_HPP
#define CUBIC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/proj_geom.hpp"

namespace cubic {

// Simple graph on at most 32 vertices, adjacency as bit masks.
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::string> labels;  // optional vertex names

  explicit Graph(int order = 0) : n(order), adj(order, 0) {}
  void add_edge(int i, int j);
  bool has_edge(int i, int j) const { return (adj[i] >> j) & 1u; }
  int degree(int i) const { return __builtin_popcount(adj[i]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::array<int, 3>> triangles() const;
  friend bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }
};

template <class F>
Graph intersection_graph(const F& k, const std::vector<LineP3<F>>& lines) {
  Graph g(static_cast<int>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i] == lines[j]) throw std::invalid_argument("intersection_graph: duplicate lines");
      if (lines_intersect(k, lines[i], lines[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

// No three pairwise non-adjacent vertices.
bool has_no_independent_triple(const Graph& g);
bool is_permissible(const Graph& g);

// Vertex map iso[v] of g1 onto g2, if one exists.
std::optional<std::vector<int>> graph_isomorphism(const Graph& g1, const Graph& g2);
bool graph_isomorphic(const Graph& g1, const Graph& g2);

// Permissible graphs of order n (1..7) up to isomorphism, by exhaustive search.
std::vector<Graph> permissible_catalog(int n);

// Checks that every graph of order 7 without three pairwise non-adjacent
// vertices has two triangles sharing an edge; returns the number of such
// graphs examined, or -1 on a counterexample.
long long check_order7_triangle_lemma();

Graph complete_graph(int n);
Graph empty_graph(int n);
// n triangles sharing one vertex
Graph friendship_graph(int n);
// Disjoint union
Graph graph_union(const Graph& a, const Graph& b);
Graph relabeled(const Graph& g, const std::vector<int>& perm);

std::string graph_json(const Graph& g);
std::string graph_dot(const Graph& g, const std::string& name = "G");

}  // namespace cubic

#endif  // CUBIC_GRAPH_HPP
