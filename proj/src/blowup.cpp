#include "cubic/blowup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cubic/catalog.hpp"
#include "cubic/embed.hpp"
#include "cubic/groebner.hpp"
#include "cubic/proj_geom.hpp"
#include "cubic/root_conditions.hpp"
#include "cubic/surface.hpp"
#include "cubic/text_format.hpp"
#include "cubic/weyl.hpp"

namespace cubic {

const std::vector<GaloisPattern>& example_patterns() {
  static const std::vector<GaloisPattern> p = {
      {1, {1, 1, 1, 1, 1, 1}}, {2, {1, 1, 1, 1, 2}}, {3, {1, 1, 1, 3}}, {4, {1, 1, 2, 2}},
      {5, {1, 1, 4}},          {6, {1, 3, 2}},       {7, {2, 2, 2}},    {8, {1, 5}},
      {9, {4, 2}},             {10, {3, 3}},         {11, {6}},
  };
  return p;
}

const GaloisPattern& pattern_item(int item) {
  if (item < 1 || item > 11) throw std::invalid_argument("pattern item must be 1..11");
  return example_patterns()[item - 1];
}

GaloisPattern pattern_from_degrees(const std::vector<int>& degrees, const std::string& case_tag) {
  std::vector<int> want(degrees);
  std::sort(want.begin(), want.end());
  if (std::accumulate(want.begin(), want.end(), 0) != 6 || want.empty() || want.front() < 1)
    throw std::invalid_argument("pattern degrees must be positive and sum to 6");
  for (const auto& p : example_patterns()) {
    std::vector<int> have(p.degrees);
    std::sort(have.begin(), have.end());
    if (have != want) continue;
    if (!case_tag.empty()) {
      if (case_tag != "skew" && case_tag != "meet") throw std::invalid_argument("case must be skew or meet");
      if (p.item != 6 && p.item != 7) throw std::invalid_argument("case tag applies only to three-line patterns");
      if ((case_tag == "skew") != (p.item == 6))
        throw std::invalid_argument("pattern " + pattern_text(p) + " gives " + (p.item == 6 ? "skew" : "meeting") +
                                    " lines");
    }
    return p;
  }
  throw std::invalid_argument("no such pattern");
}

std::string pattern_text(const GaloisPattern& p) {
  std::string s;
  for (int d : p.degrees) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

PredictedLines predicted_count(const GaloisPattern& p) {
  // cyclic permutation of each block of consecutive point indices
  std::array<int, 7> sigma{};
  int start = 1;
  for (int d : p.degrees) {
    for (int i = 0; i < d; ++i) sigma[start + i] = start + (i + 1) % d;
    start += d;
  }
  if (start != 7) throw std::invalid_argument("pattern degrees must sum to 6");
  Perm27 perm{};
  for (int i = 1; i <= 6; ++i) {
    perm[label_e(i)] = static_cast<std::uint8_t>(label_e(sigma[i]));
    perm[label_c(i)] = static_cast<std::uint8_t>(label_c(sigma[i]));
    for (int j = i + 1; j <= 6; ++j) perm[label_l(i, j)] = static_cast<std::uint8_t>(label_l(sigma[i], sigma[j]));
  }
  PredictedLines out;
  for (int v = 0; v < 27; ++v)
    if (perm[v] == v) out.labels.push_back(v);
  out.count = static_cast<int>(out.labels.size());
  const Graph& model = incidence_model();
  out.graph = Graph(out.count);
  for (int i = 0; i < out.count; ++i) {
    out.graph.labels.push_back(label_name(out.labels[i]));
    for (int j = i + 1; j < out.count; ++j)
      if (model.has_edge(out.labels[i], out.labels[j])) out.graph.add_edge(i, j);
  }
  return out;
}

const std::array<PlaneExps, 10>& plane_cubic_monomials() {
  static const std::array<PlaneExps, 10> m = [] {
    std::array<PlaneExps, 10> r{};
    int n = 0;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b) r[n++] = {a, b, 3 - a - b};
    return r;
  }();
  return m;
}

std::string SexticCheck::failed() const {
  std::string s;
  auto add = [&](bool ok, const char* what) {
    if (!ok) s += (s.empty() ? "" : ", ") + std::string(what);
  };
  add(squarefree, "squarefree");
  add(quintic_term, "degree-5 term");
  add(triple_sum_free, "no three roots summing to zero");
  add(factor_degrees, "factor degrees");
  return s;
}

namespace {

template <class F>
bool degrees_match(const Poly<F>& G, const std::vector<int>& degrees) {
  std::vector<int> want(degrees);
  std::sort(want.begin(), want.end());
  const auto fac = factor(G);
  for (const auto& [f, e] : fac.factors)
    if (e != 1) return false;
  return fac.degrees() == want;
}

}  // namespace

SexticCheck check_sextic(const QPoly& G, const std::vector<int>& degrees) {
  SexticCheck c;
  if (G.degree() != 6) return c;
  c.squarefree = is_squarefree(G);
  c.quintic_term = !G.field().is_zero(G.coeff(5));
  c.triple_sum_free = c.squarefree && triple_sum_free(G);
  c.factor_degrees = degrees_match(G, degrees);
  return c;
}

SexticCheck check_sextic(const FqPoly& G, const FieldPtr& k, const std::vector<int>& degrees) {
  SexticCheck c;
  if (G.degree() != 6) return c;
  c.squarefree = is_squarefree(G);
  c.quintic_term = !G.field().is_zero(G.coeff(5));
  c.triple_sum_free = c.squarefree && triple_sum_free(G, k);
  c.factor_degrees = degrees_match(G, degrees);
  return c;
}

const std::vector<std::string>& rational_sextic_texts() {
  static const std::vector<std::string> t = {
      "t^6+15*t^5+85*t^4+225*t^3+274*t^2+120*t",
      "t^6+10*t^5+36*t^4+60*t^3+59*t^2+50*t+24",
      "t^6+7*t^5+17*t^4+18*t^3+12*t^2+11*t+6",
      "t^6+3*t^5+5*t^4+9*t^3+8*t^2+6*t+4",
      "t^6+3*t^5+2*t^4+t^2+3*t+2",
      "t^6+2*t^5+2*t^4+3*t^3+2*t^2+t+1",
      "t^6+t^5+4*t^4+3*t^3+5*t^2+2*t+2",
      "t^6+t^5+t^3+t",
      "t^6+t^5+t^4+t^2+t+1",
      "t^6+3*t^5+2*t^4+2*t^3+3*t^2+1",
      "t^6+t^5+1",
  };
  return t;
}

QPoly rational_sextic(int item) {
  if (item < 1 || item > 11) throw std::invalid_argument("pattern item must be 1..11");
  return parse_poly(RationalField::instance(), rational_sextic_texts()[item - 1]);
}

namespace {

// Factors of G reordered to follow the pattern's degree sequence.
template <class F>
std::vector<Poly<F>> ordered_factors(const Poly<F>& G, const GaloisPattern& p) {
  std::vector<Poly<F>> pool;
  for (const auto& [f, e] : factor(G).factors) pool.push_back(f);
  std::vector<Poly<F>> out;
  for (int d : p.degrees) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](const Poly<F>& f) { return f.degree() == d; });
    if (it == pool.end()) throw ConstructionError("G does not factor with the pattern's degrees");
    out.push_back(*it);
    pool.erase(it);
  }
  return out;
}

FqPoly product(const FiniteField& k, const std::vector<FqPoly>& fs) {
  FqPoly g = FqPoly::constant(k, k.one());
  for (const auto& f : fs) g = g * f;
  return g;
}

// Monic irreducibles of degree d: all of them when q^d <= 4096, else the
// first `cap` in counter order.
std::vector<FqPoly> irreducible_candidates(const FiniteField& k, int d, std::size_t cap, bool& complete) {
  std::uint64_t total = 1;
  bool small = true;
  for (int i = 0; i < d; ++i) {
    total *= k.order();
    if (total > 4096) small = false;
  }
  std::vector<FqPoly> out;
  for (std::uint64_t idx = 0; idx < total && (small || out.size() < cap); ++idx) {
    std::vector<FiniteField::Elem> c(d + 1);
    std::uint64_t r = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = r % k.order();
      r /= k.order();
    }
    c[d] = k.one();
    FqPoly f(k, std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  complete = complete && small;
  return out;
}

struct CurveSearch {
  std::optional<std::vector<FqPoly>> factors;
  std::map<std::string, long> failures;
  bool exhaustive = true;
};

CurveSearch search_curve(const FieldPtr& k, const GaloisPattern& p) {
  CurveSearch res;
  std::map<int, std::vector<FqPoly>> cand;
  for (int d : p.degrees)
    if (!cand.count(d)) cand[d] = irreducible_candidates(*k, d, 48, res.exhaustive);
  const std::size_t n = p.degrees.size();
  std::vector<std::size_t> pick(n, 0);
  std::vector<FqPoly> chosen;
  long budget = 20000;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (budget <= 0) {
      res.exhaustive = false;
      return false;
    }
    if (i == n) {
      const FqPoly G = product(*k, chosen);
      if (k->is_zero(G.coeff(5))) {
        ++res.failures["degree-5 term"];
        return false;
      }
      return true;
    }
    const auto& list = cand[p.degrees[i]];
    const std::size_t from = (i > 0 && p.degrees[i - 1] == p.degrees[i]) ? pick[i - 1] + 1 : 0;
    for (std::size_t j = from; j < list.size(); ++j) {
      pick[i] = j;
      chosen.push_back(list[j]);
      const FqPoly partial = product(*k, chosen);
      --budget;
      const bool ok = partial.degree() < 3 || triple_sum_free(partial, k);
      if (!ok) ++res.failures["no three roots summing to zero"];
      if (ok && self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) res.factors = chosen;
  return res;
}

using Pt = ProjPoint<FiniteField>;

struct PointSearch {
  std::vector<std::vector<Pt>> orbits;
  bool found = false;
  bool exhaustive = true;
};

std::vector<Pt> frobenius_orbit(const FiniteField& K, int n, const Pt& p) {
  std::vector<Pt> orbit{p};
  while (true) {
    Vec<FiniteField> v;
    for (auto x : orbit.back().c) v.push_back(K.frobenius(x, n));
    Pt nxt = Pt::make(K, v);
    if (nxt == p) return orbit;
    orbit.push_back(nxt);
  }
}

PointSearch search_points(const FieldPtr& k, const FieldPtr& K, const GaloisPattern& p) {
  const int n = k->degree();
  const Embedding emb = embed(k, K);
  PointSearch res;
  std::map<int, std::vector<std::vector<Pt>>> cand;
  for (int d : p.degrees) {
    if (cand.count(d)) continue;
    auto& list = cand[d];
    if (d == 1) {
      for (const auto& v : projective_points(*k, 2)) list.push_back({Pt::make(*K, {emb(v[0]), emb(v[1]), emb(v[2])})});
      continue;
    }
    const FieldPtr sub = FiniteField::get(k->characteristic(), n * d);
    const Embedding es = embed(sub, K);
    std::mt19937_64 rng(1000 + d);
    std::set<Vec<FiniteField>> seen;
    for (int tries = 0; tries < 4000 && list.size() < 64; ++tries) {
      const Pt pt = Pt::make(*K, {K->one(), es(rng() % sub->order()), es(rng() % sub->order())});
      auto orbit = frobenius_orbit(*K, n, pt);
      if (static_cast<int>(orbit.size()) != d) continue;
      Vec<FiniteField> key = orbit[0].c;
      for (const auto& q : orbit) key = std::min(key, q.c);
      if (seen.insert(key).second) list.push_back(std::move(orbit));
    }
    res.exhaustive = false;
  }
  std::vector<Pt> pts;
  std::vector<std::size_t> pick(p.degrees.size(), 0);
  long budget = 3000000;
  auto collinear3 = [&](const Pt& a, const Pt& b, const Pt& c) {
    return K->is_zero(det(*K, Mat<FiniteField>{a.c, b.c, c.c}));
  };
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == p.degrees.size()) {
      --budget;
      return !on_common_conic(*K, pts);
    }
    const auto& list = cand[p.degrees[i]];
    const std::size_t from = (i > 0 && p.degrees[i - 1] == p.degrees[i]) ? pick[i - 1] + 1 : 0;
    for (std::size_t j = from; j < list.size() && budget > 0; ++j) {
      pick[i] = j;
      const std::size_t base = pts.size();
      bool ok = true;
      for (const auto& q : list[j]) {
        for (std::size_t a = 0; a < pts.size() && ok; ++a) {
          ok = pts[a] != q;
          for (std::size_t b = a + 1; b < pts.size() && ok; ++b) ok = !collinear3(pts[a], pts[b], q);
        }
        if (!ok) break;
        pts.push_back(q);
      }
      budget -= static_cast<long>(pts.size());
      if (ok && self(self, i + 1)) {
        res.orbits.push_back(list[j]);
        return true;
      }
      pts.resize(base);
    }
    return false;
  };
  res.found = rec(rec, 0);
  if (budget <= 0) res.exhaustive = false;
  std::reverse(res.orbits.begin(), res.orbits.end());
  return res;
}

std::vector<std::string> orbit_text(const FiniteField& K, const std::vector<Pt>& orbit) {
  std::vector<std::string> out;
  for (const auto& q : orbit) out.push_back(to_string(K, q));
  return out;
}

void finish_from_factors(Construction& c) {
  const auto& k = *c.field;
  c.G = product(k, c.factors);
  c.cubics = cubics_through(k, c.factors);
  c.surface = anticanonical_image(k, c.cubics);
  const auto split = splitting_roots(*c.G, c.field);
  c.point_field = split.field->header();
  const auto& K = *split.field;
  for (const auto& f : c.factors) {
    const FqPoly fK = split.field == c.field ? f : embed(c.field, split.field).map(f);
    std::vector<Pt> orbit;
    for (auto t : roots(fK)) orbit.push_back(Pt::make(K, {K.one(), t, K.mul(K.mul(t, t), t)}));
    c.orbits.push_back(orbit_text(K, orbit));
  }
}

}  // namespace

Construction construct_surface(const FieldPtr& k, const GaloisPattern& p) {
  Construction c;
  c.pattern = p;
  c.field = k;
  std::string why;
  if (k->characteristic() == 2) {
    try {
      auto b = char2_sextic(k, p.item);
      const auto chk = check_sextic(b.G, k, p.degrees);
      if (chk.ok()) {
        c.source = "curve";
        c.factors = b.factors;
        c.transcript = b.transcript;
        c.transcript.insert(c.transcript.begin(), "char-2 recipe for pattern " + std::to_string(p.item));
        finish_from_factors(c);
        return c;
      }
      why = "char-2 recipe failed: " + chk.failed();
      c.transcript.push_back(why);
    } catch (const std::domain_error& e) {
      c.transcript.push_back(std::string("char-2 recipe unavailable: ") + e.what());
    }
  }
  const auto cs = search_curve(k, p);
  if (cs.factors) {
    c.source = "curve";
    c.factors = *cs.factors;
    c.transcript.push_back("sextic found on the curve [1:t:t^3]");
    finish_from_factors(c);
    return c;
  }
  std::string most;
  long worst = -1;
  for (const auto& [what, n] : cs.failures)
    if (n > worst) {
      worst = n;
      most = what;
    }
  c.transcript.push_back(std::string("curve search ") + (cs.exhaustive ? "exhausted" : "gave up") +
                         (most.empty() ? "" : "; most frequent failure: " + most));
  if (p.item == 1 && k->characteristic() == 2 && k->degree() == 3) {
    const auto& s = f8_split_surface();
    c.source = "fixed";
    c.surface = parse_cubic(*k, s.equation);
    c.transcript.push_back("fixed 27-line surface over F_8");
    return c;
  }
  int L = 1;
  for (int d : p.degrees) L = std::lcm(L, d);
  const FieldPtr K = FiniteField::get(k->characteristic(), k->degree() * L);
  const auto ps = search_points(k, K, p);
  if (!ps.found)
    throw ConstructionError("pattern " + pattern_text(p) + " over " + k->header() + ": no six points in general position (" +
                            (ps.exhaustive ? "exhaustive" : "budgeted") + " search); " + c.transcript.back());
  c.source = "points";
  c.point_field = K->header();
  Mat<FiniteField> m;
  const auto& mons = plane_cubic_monomials();
  for (const auto& orbit : ps.orbits) {
    c.orbits.push_back(orbit_text(*K, orbit));
    for (const auto& q : orbit) {
      Vec<FiniteField> row;
      for (const auto& e : mons)
        row.push_back(K->mul(K->mul(K->pow(q.c[0], e[0]), K->pow(q.c[1], e[1])), K->pow(q.c[2], e[2])));
      m.push_back(std::move(row));
    }
  }
  const auto basisK = cubics_from_conditions(*K, std::move(m));
  const Embedding emb = embed(k, K);
  for (const auto& v : basisK) {
    PlaneCubic<FiniteField> w;
    for (int i = 0; i < 10; ++i) {
      auto x = emb.preimage(v[i]);
      if (!x) throw std::logic_error("cubics through a Galois-stable point set are not defined over the base");
      w[i] = *x;
    }
    c.cubics.push_back(w);
  }
  c.transcript.push_back("point orbits found in general position");
  c.surface = anticanonical_image(*k, c.cubics);
  return c;
}

RationalConstruction construct_rational(const GaloisPattern& p) {
  const auto& Q = RationalField::instance();
  RationalConstruction r{p, rational_sextic(p.item), {}, {}, {}};
  r.factors = ordered_factors(r.G, p);
  r.cubics = cubics_through(Q, r.factors);
  auto f = anticanonical_image(Q, r.cubics);
  mpz_class den = 1, num = 0;
  for (const auto& x : f.c) den = lcm(den, mpz_class(x.get_den()));
  for (auto& x : f.c) {
    x *= den;
    num = gcd(num, mpz_class(x.get_num()));
  }
  for (auto& x : f.c) x /= num;
  r.surface = f;
  return r;
}

CrossCheck cross_validate(const Construction& c) {
  CrossCheck r;
  const auto pred = predicted_count(c.pattern);
  r.predicted = pred.count;
  r.smooth = is_smooth(*c.field, c.surface);
  if (!r.smooth) return r;
  const auto ls = rational_lines(c.field, c.surface);
  r.enumerated = static_cast<int>(ls.lines.size());
  r.graph_isomorphic = graph_isomorphic(intersection_graph(*c.field, ls.lines), pred.graph);
  return r;
}

CubicForm<FiniteField> reduce_mod(const FiniteField& Fp, const CubicForm<RationalField>& f) {
  if (Fp.degree() != 1) throw std::invalid_argument("reduce_mod: prime field expected");
  auto g = CubicForm<FiniteField>::zero(Fp);
  const mpz_class p(static_cast<unsigned long>(Fp.characteristic()));
  for (int i = 0; i < 20; ++i) {
    if (f.c[i].get_den() != 1) throw std::invalid_argument("reduce_mod: integral form expected");
    mpz_class r = f.c[i].get_num() % p;
    if (r < 0) r += p;
    g.c[i] = r.get_ui();
  }
  return g;
}

}  // namespace cubic
