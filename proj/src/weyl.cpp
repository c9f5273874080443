#include "cubic/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubic {

namespace {

const std::array<std::pair<int, int>, 15>& pairs() {
  static const std::array<std::pair<int, int>, 15> p = [] {
    std::array<std::pair<int, int>, 15> r{};
    int n = 0;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) r[n++] = {i, j};
    return r;
  }();
  return p;
}

}  // namespace

int label_e(int i) { return i - 1; }
int label_c(int i) { return 5 + i; }
int label_l(int i, int j) {
  if (i > j) std::swap(i, j);
  const auto& p = pairs();
  for (int n = 0; n < 15; ++n)
    if (p[n] == std::make_pair(i, j)) return 12 + n;
  throw std::invalid_argument("label_l: indices must be distinct in 1..6");
}

std::string label_name(int v) {
  if (v < 6) return "E" + std::to_string(v + 1);
  if (v < 12) return "C" + std::to_string(v - 5);
  const auto [i, j] = pairs()[v - 12];
  return "L" + std::to_string(i) + std::to_string(j);
}

int label_from_name(const std::string& s) {
  for (int v = 0; v < 27; ++v)
    if (label_name(v) == s) return v;
  throw std::invalid_argument("unknown line label: " + s);
}

const Graph& incidence_model() {
  static const Graph g = [] {
    Graph m(27);
    for (int v = 0; v < 27; ++v) m.labels.push_back(label_name(v));
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (i != j) m.add_edge(label_e(i), label_c(j));
    for (int n = 0; n < 15; ++n) {
      const auto [a, b] = pairs()[n];
      for (int i : {a, b}) {
        m.add_edge(label_e(i), 12 + n);
        m.add_edge(label_c(i), 12 + n);
      }
      for (int o = n + 1; o < 15; ++o) {
        const auto [c, d] = pairs()[o];
        if (a != c && a != d && b != c && b != d) m.add_edge(12 + n, 12 + o);
      }
    }
    return m;
  }();
  return g;
}

bool is_automorphism(const Perm27& p) {
  const Graph& g = incidence_model();
  std::uint32_t seen = 0;
  for (int v = 0; v < 27; ++v) seen |= 1u << p[v];
  if (seen != (1u << 27) - 1) return false;
  for (int u = 0; u < 27; ++u)
    for (int v = u + 1; v < 27; ++v)
      if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
  return true;
}

namespace {

void search(const Graph& g, const std::vector<int>& order, std::size_t depth, Perm27& img, std::uint32_t used,
            std::vector<Perm27>& out) {
  if (depth == order.size()) {
    out.push_back(img);
    return;
  }
  const int v = order[depth];
  for (int w = 0; w < 27; ++w) {
    if ((used >> w) & 1u) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) ok = g.has_edge(order[d], v) == g.has_edge(img[order[d]], w);
    if (!ok) continue;
    img[v] = static_cast<std::uint8_t>(w);
    search(g, order, depth + 1, img, used | (1u << w), out);
  }
}

}  // namespace

const std::vector<Perm27>& automorphism_group() {
  static const std::vector<Perm27> group = [] {
    const Graph& g = incidence_model();
    std::vector<int> order{0};
    std::vector<bool> seen(27, false);
    seen[0] = true;
    for (std::size_t h = 0; h < order.size(); ++h)
      for (int w = 0; w < 27; ++w)
        if (g.has_edge(order[h], w) && !seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
    std::vector<Perm27> out;
    Perm27 img{};
    search(g, order, 0, img, 0, out);
    std::sort(out.begin(), out.end());
    return out;
  }();
  return group;
}

std::uint32_t fixed_set(const Perm27& p) {
  std::uint32_t s = 0;
  for (int v = 0; v < 27; ++v)
    if (p[v] == v) s |= 1u << v;
  return s;
}

std::set<std::uint32_t> fixed_set_closure() {
  std::set<std::uint32_t> family;
  for (const auto& p : automorphism_group()) family.insert(fixed_set(p));
  std::vector<std::uint32_t> frontier(family.begin(), family.end());
  const std::vector<std::uint32_t> gens(frontier);
  // intersecting with element fixed sets suffices: any intersection of
  // members is reached one generator at a time
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t a : frontier)
      for (std::uint32_t b : gens)
        if (family.insert(a & b).second) next.push_back(a & b);
    frontier.swap(next);
  }
  return family;
}

std::set<int> possible_fixed_counts() {
  std::set<int> sizes;
  for (std::uint32_t s : fixed_set_closure()) sizes.insert(__builtin_popcount(s));
  return sizes;
}

namespace {

bool pairwise_skew(const Graph& g, const int* v, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] == v[j] || g.has_edge(v[i], v[j])) return false;
  return true;
}

}  // namespace

std::array<int, 2> transversals_of_four_skew(const std::array<int, 4>& skew) {
  const Graph& g = incidence_model();
  if (!pairwise_skew(g, skew.data(), 4)) throw std::invalid_argument("transversals: lines must be pairwise skew");
  std::uint32_t common = (1u << 27) - 1;
  for (int v : skew) common &= g.adj[v];
  if (__builtin_popcount(common) != 2) throw std::logic_error("transversals: model does not give two lines");
  const int a = __builtin_ctz(common);
  common &= common - 1;
  return {a, __builtin_ctz(common)};
}

std::vector<DoubleSix> double_sixes() {
  const Graph& g = incidence_model();
  // sextuples of pairwise skew lines
  std::vector<std::array<int, 6>> sixes;
  std::array<int, 6> cur{};
  auto rec = [&](auto&& self, int depth, int start, std::uint32_t allowed) -> void {
    if (depth == 6) {
      sixes.push_back(cur);
      return;
    }
    for (int v = start; v < 27; ++v) {
      if (!((allowed >> v) & 1u)) continue;
      cur[depth] = v;
      self(self, depth + 1, v + 1, allowed & ~g.adj[v]);
    }
  };
  rec(rec, 0, 0, (1u << 27) - 1);
  std::vector<DoubleSix> out;
  for (const auto& a : sixes) {
    DoubleSix d{a, {}};
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      // b[i] meets the five a[j], j != i, and is skew to a[i]
      std::uint32_t c = (1u << 27) - 1;
      for (int j = 0; j < 6; ++j) c &= j == i ? ~g.adj[a[j]] & ~(1u << a[j]) : g.adj[a[j]];
      c &= (1u << 27) - 1;
      if (__builtin_popcount(c) != 1) ok = false;
      else d.b[i] = __builtin_ctz(c);
    }
    if (ok && pairwise_skew(g, d.b.data(), 6) && d.a[0] < *std::min_element(d.b.begin(), d.b.end())) out.push_back(d);
  }
  return out;
}

DoubleSix double_six_of(int l, int m) {
  const Graph& g = incidence_model();
  if (l == m || g.has_edge(l, m)) throw std::invalid_argument("double_six_of: lines must be distinct and skew");
  for (const auto& d : double_sixes())
    for (int i = 0; i < 6; ++i)
      if ((d.a[i] == l && d.b[i] == m) || (d.a[i] == m && d.b[i] == l)) return d;
  throw std::logic_error("double_six_of: no double six separates the pair");
}

SteinerGrid steiner_complete(const std::array<int, 3>& t1, const std::array<int, 3>& t2) {
  const Graph& g = incidence_model();
  auto is_triangle = [&](const std::array<int, 3>& t) {
    return g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2]);
  };
  if (!is_triangle(t1) || !is_triangle(t2)) throw std::invalid_argument("steiner_complete: inputs must be coplanar triples");
  for (int a : t1)
    for (int b : t2)
      if (a == b) throw std::invalid_argument("steiner_complete: triples must be disjoint");
  SteinerGrid grid{};
  std::uint32_t used = 0;
  for (int i = 0; i < 3; ++i) {
    int partner = -1;
    for (int b : t2)
      if (g.has_edge(t1[i], b)) {
        if (partner >= 0) throw std::invalid_argument("steiner_complete: line meets two lines of the other triple");
        partner = b;
      }
    if (partner < 0 || ((used >> partner) & 1u))
      throw std::invalid_argument("steiner_complete: lines must meet distinct lines of the other triple");
    used |= 1u << partner;
    const std::uint32_t third = g.adj[t1[i]] & g.adj[partner];
    grid[i] = {t1[i], partner, __builtin_ctz(third)};
  }
  return grid;
}

}  // namespace cubic
