#include "cubic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace cubic {

void Graph::add_edge(int i, int j) {
  if (i == j) throw std::invalid_argument("graph: loops are not allowed");
  adj[i] |= 1u << j;
  adj[j] |= 1u << i;
}

int Graph::edge_count() const {
  int e = 0;
  for (int i = 0; i < n; ++i) e += degree(i);
  return e / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::array<int, 3>> Graph::triangles() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!has_edge(i, j)) continue;
      std::uint32_t common = adj[i] & adj[j] & ~((2u << j) - 1);
      while (common) {
        const int k = __builtin_ctz(common);
        common &= common - 1;
        out.push_back({i, j, k});
      }
    }
  return out;
}

bool has_no_independent_triple(const Graph& g) {
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) {
      if (g.has_edge(i, j)) continue;
      const std::uint32_t non = all & ~g.adj[i] & ~g.adj[j] & ~((2u << j) - 1);
      if (non) return false;
    }
  return true;
}

bool is_permissible(const Graph& g) {
  if (!has_no_independent_triple(g)) return false;
  for (const auto& [i, j] : g.edges()) {
    const int common = __builtin_popcount(g.adj[i] & g.adj[j]);
    if (common != 1) return false;  // 0: edge in no triangle; 2+: triangles share it
  }
  return true;
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> map, order;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  std::vector<int> d1, d2;
  for (int i = 0; i < g1.n; ++i) {
    d1.push_back(g1.degree(i));
    d2.push_back(g2.degree(i));
  }
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  IsoSearch s{g1, g2, std::vector<int>(g1.n, -1), {}, std::vector<bool>(g1.n, false)};
  // breadth-first order so each new vertex has mapped neighbours to check
  std::vector<bool> seen(g1.n, false);
  for (int root = 0; root < g1.n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    s.order.push_back(root);
    for (std::size_t h = s.order.size() - 1; h < s.order.size(); ++h)
      for (int w = 0; w < g1.n; ++w)
        if (g1.has_edge(s.order[h], w) && !seen[w]) {
          seen[w] = true;
          s.order.push_back(w);
        }
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

bool graph_isomorphic(const Graph& g1, const Graph& g2) { return graph_isomorphism(g1, g2).has_value(); }

namespace {

Graph from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++b)
      if ((bits >> b) & 1u) g.add_edge(i, j);
  return g;
}

}  // namespace

std::vector<Graph> permissible_catalog(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("permissible_catalog: order must be 1..7");
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    const Graph g = from_bits(n, bits);
    if (!is_permissible(g)) continue;
    if (std::none_of(out.begin(), out.end(), [&](const Graph& h) { return graph_isomorphic(g, h); })) out.push_back(g);
  }
  return out;
}

long long check_order7_triangle_lemma() {
  long long examined = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 21); ++bits) {
    const Graph g = from_bits(7, bits);
    if (!has_no_independent_triple(g)) continue;
    ++examined;
    bool shared = false;
    for (const auto& [i, j] : g.edges())
      if (__builtin_popcount(g.adj[i] & g.adj[j]) >= 2) {
        shared = true;
        break;
      }
    if (!shared) return -1;
  }
  return examined;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph friendship_graph(int n) {
  Graph g(2 * n + 1);
  for (int t = 0; t < n; ++t) {
    g.add_edge(0, 2 * t + 1);
    g.add_edge(0, 2 * t + 2);
    g.add_edge(2 * t + 1, 2 * t + 2);
  }
  return g;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph g(a.n + b.n);
  for (const auto& [i, j] : a.edges()) g.add_edge(i, j);
  for (const auto& [i, j] : b.edges()) g.add_edge(a.n + i, a.n + j);
  return g;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n);
  for (const auto& [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
  return h;
}

std::string graph_json(const Graph& g) {
  nlohmann::json j;
  j["order"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j.dump();
}

std::string graph_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int i = 0; i < g.n; ++i)
    os << "  " << i << (g.labels.empty() ? "" : " [label=\"" + g.labels[i] + "\"]") << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cubic
