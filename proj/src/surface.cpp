#include "cubic/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cubic {

using Elem = FiniteField::Elem;
using FLine = LineP3<FiniteField>;
using FVec = Vec<FiniteField>;

bool line_in_surface_setwise(const FiniteField& k, const CubicForm<FiniteField>& f, const FLine& l) {
  for (const auto& p : rational_points(k, l))
    if (!k.is_zero(evaluate(k, f, p))) return false;
  return true;
}

bool is_admissible_line_count(int n) {
  static const std::set<int> ok{0, 1, 2, 3, 5, 7, 9, 15, 27};
  return ok.count(n) > 0;
}

CubicForm<FiniteField> map_form(const Embedding& e, const CubicForm<FiniteField>& f) {
  CubicForm<FiniteField> g;
  for (int i = 0; i < 20; ++i) g.c[i] = e(f.c[i]);
  return g;
}

std::vector<FLine> contained_lines(const FiniteField& k, const CubicForm<FiniteField>& f) {
  const std::uint64_t q = k.order();
  const bool tabulate = q <= 64;
  std::vector<std::uint8_t> on;  // f(p) == 0, indexed by packed coordinates
  auto pack = [q](const std::array<Elem, 4>& v) { return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]; };
  if (tabulate) {
    on.assign(q * q * q * q, 0);
    for (const auto& p : projective_points(k, 3))
      on[pack({p[0], p[1], p[2], p[3]})] = k.is_zero(evaluate(k, f, p));
  }
  std::vector<FLine> out;
  for_each_line_p3(k, [&](const FLine& l) {
    if (tabulate) {
      if (!on[pack(l.rows[0])] || !on[pack(l.rows[1])]) return;
    }
    if (line_in_surface(k, f, l)) out.push_back(l);
  });
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return line_less(k, a, b); });
  return out;
}

LineSet rational_lines(const FieldPtr& k, const CubicForm<FiniteField>& f) {
  if (!is_smooth(*k, f)) throw NotSmoothError();
  LineSet ls;
  ls.base = ls.ext = k;
  ls.embedding.emplace(k, k, k->degree() == 1 ? k->zero() : k->gen());
  ls.lines = contained_lines(*k, f);
  ls.min_degree.assign(ls.lines.size(), 1);
  if (!is_admissible_line_count(static_cast<int>(ls.lines.size())))
    throw std::logic_error("smooth surface with an impossible rational line count");
  return ls;
}

namespace {

FLine frobenius_image(const FiniteField& K, int base_degree, const FLine& l);

Poly<FiniteField> poly_of(const FiniteField& K, std::vector<Elem> c) { return Poly<FiniteField>(K, std::move(c)); }

// Lines through the surface point P whose direction is defined over K.
std::vector<FLine> lines_through(const FiniteField& K, const CubicForm<FiniteField>& f, const FVec& P) {
  const FVec grad = gradient(K, f, P);
  auto tangent = kernel(K, Mat<FiniteField>{grad}, 4);
  if (tangent.size() != 3) throw NotSmoothError();
  // two tangent directions independent of P
  FVec U, V;
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = i + 1; j < 3 && !found; ++j)
      if (rank(K, Mat<FiniteField>{P, tangent[i], tangent[j]}) == 3) {
        U = tangent[i];
        V = tangent[j];
        found = true;
      }
  Mat<FiniteField> T(4, FVec(4, 0));
  for (int i = 0; i < 4; ++i) {
    T[i][0] = P[i];
    T[i][1] = U[i];
    T[i][2] = V[i];
  }
  const auto g = substitute(K, f, T);
  // points s P + t (U + lambda V); coefficient of s^(3-e) t^e in lambda
  auto cond = [&](int e) {
    std::vector<Elem> c(e + 1, 0);
    for (int cc = 0; cc <= e; ++cc) c[cc] = g.coeff({3 - e, e - cc, cc, 0});
    return poly_of(K, c);
  };
  const auto c2 = cond(2), c3 = cond(3);
  std::vector<FLine> out;
  auto add_dir = [&](const FVec& r) { out.push_back(FLine::span(K, P, r)); };
  // direction V itself (lambda at infinity)
  if (c2.degree() < 2 && c3.degree() < 3) add_dir(V);
  Poly<FiniteField> h = gcd(c2, c3);
  if (h.is_zero()) throw NotSmoothError();  // tangent plane inside the surface
  if (h.degree() >= 1) {
    for (Elem lam : roots(h)) {
      FVec r(4);
      for (int i = 0; i < 4; ++i) r[i] = K.add(U[i], K.mul(lam, V[i]));
      add_dir(r);
    }
  }
  return out;
}

// Lines through the points [1:u:w:0] of the plane section x3 = 0 for one u.
std::optional<FLine> scan_section(const FiniteField& K, const CubicForm<FiniteField>& f, const FVec& p) {
  const FVec r{0, 0, 1, 0};
  const auto c = restrict_to_line(K, f, p, r);
  if (K.is_zero(c[0]) && K.is_zero(c[1]) && K.is_zero(c[2]) && K.is_zero(c[3])) return FLine::span(K, p, r);
  for (Elem w : roots(poly_of(K, {c[0], c[1], c[2], c[3]}))) {
    FVec P = p;
    P[2] = w;
    auto ls = lines_through(K, f, P);
    if (!ls.empty()) return ls.front();
  }
  return std::nullopt;
}

// Every line meets the plane x3 = 0, so scanning its points is complete.
std::optional<FLine> scan_plane_edges(const FiniteField& K, const CubicForm<FiniteField>& f) {
  const FVec r{0, 0, 1, 0};
  if (K.is_zero(evaluate(K, f, r))) {
    auto ls = lines_through(K, f, r);
    if (!ls.empty()) return ls.front();
  }
  return scan_section(K, f, {0, 1, 0, 0});
}

std::optional<FLine> first_line_exhaustive(const FiniteField& K, const CubicForm<FiniteField>& f) {
  if (auto l = scan_plane_edges(K, f)) return l;
  for (Elem u = 0; u < K.order(); ++u)
    if (auto l = scan_section(K, f, {1, u, 0, 0})) return l;
  return std::nullopt;
}

// Resultant from the Sylvester matrix, with the formal degrees size - 1.
Elem formal_resultant(const FiniteField& K, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  const int n = da + db;
  Mat<FiniteField> m(n, FVec(n, 0));
  for (int r = 0; r < db; ++r)
    for (int i = 0; i <= da; ++i) m[r][r + da - i] = a[i];
  for (int r = 0; r < da; ++r)
    for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = b[i];
  return det(K, m);
}

std::vector<Elem> padded(const Poly<FiniteField>& p, int len) {
  std::vector<Elem> c(len, 0);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p.coeff(i);
  return c;
}

}  // namespace

// Polynomial in u vanishing at the u-coordinate of every point [1:u:w:0]
// through which a line (1,u,w,0) + t(0,1,s,v) of the surface passes.
// Eliminates v with the tangency condition, s with a resultant (total
// degree <= 27 in u, w) and w against the section cubic (degree <= 81),
// by evaluation and interpolation in an extension with enough elements.
Poly<FiniteField> line_point_polynomial(const FieldPtr& k, const CubicForm<FiniteField>& f) {
  constexpr int kDegW = 27, kDegU = 81;
  int e = 1;
  while (std::pow(static_cast<double>(k->order()), e) < 2.0 * (kDegU + 1)) ++e;
  const FieldPtr E = FiniteField::get(k->characteristic(), k->degree() * e);
  const Embedding up = embed(k, E);
  const auto fE = map_form(up, f);
  const Poly<FiniteField> X(*E, {0, 1});
  auto R = [&](Elem u0, Elem w0) {
    Mat<FiniteField> T(4, FVec(4, 0));
    T[0][0] = 1;
    T[1][0] = u0;
    T[2][0] = w0;
    T[1][1] = T[2][2] = T[3][3] = 1;
    const auto g = substitute(*E, fE, T);
    const Elem alpha = g.coeff({2, 1, 0, 0}), beta = g.coeff({2, 0, 1, 0}), gamma = g.coeff({2, 0, 0, 1});
    const auto gv = Poly<FiniteField>(*E, {E->neg(alpha), E->neg(beta)});  // gamma * v
    auto eliminate = [&](int y0, int deg) {
      Poly<FiniteField> acc(*E);
      for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b) {
          const Elem c = g.coeff({y0, deg - a - b, a, b});
          if (E->is_zero(c)) continue;
          acc = acc + Poly<FiniteField>::monomial(*E, E->mul(c, E->pow(gamma, deg - b)), a) * pow(gv, b);
        }
      return padded(acc, deg + 1);
    };
    return formal_resultant(*E, eliminate(1, 2), eliminate(0, 3));
  };
  std::vector<Elem> us, phis, ws;
  for (Elem w = 0; w <= kDegW; ++w) ws.push_back(w);
  for (Elem u0 = 0; u0 <= kDegU; ++u0) {
    std::vector<Elem> rv;
    for (Elem w0 : ws) rv.push_back(R(u0, w0));
    const auto Rw = interpolate(*E, ws, rv);
    const auto h = restrict_to_line(*E, fE, {1, u0, 0, 0}, {0, 0, 1, 0});
    us.push_back(u0);
    phis.push_back(formal_resultant(*E, {h[0], h[1], h[2], h[3]}, padded(Rw, kDegW + 1)));
  }
  const auto phiE = interpolate(*E, us, phis);
  std::vector<Elem> c;
  for (Elem x : phiE.coeffs()) {
    auto y = up.preimage(x);
    if (!y) throw std::logic_error("line_point_polynomial: coefficient outside the base field");
    c.push_back(*y);
  }
  return poly_of(*k, c);
}

namespace {

// Least d such that Frobenius^d fixes l (the degree of its field of definition).
int definition_degree(const FiniteField& K, int base_degree, const FLine& l) {
  FLine cur = frobenius_image(K, base_degree, l);
  int d = 1;
  while (cur != l) {
    cur = frobenius_image(K, base_degree, cur);
    ++d;
  }
  return d;
}

constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 16;

// A line of the surface and the level m with the line defined over F_{q^m}.
std::pair<FLine, int> first_line(const FieldPtr& kd, const CubicForm<FiniteField>& fd, int max_extension) {
  const auto p = kd->characteristic();
  const int n = kd->degree();
  std::optional<Factorization<FiniteField>> phi;
  bool phi_usable = true;
  std::vector<int> guided_levels;
  for (int m = 1; m <= max_extension; ++m) {
    const FieldPtr K = FiniteField::get(p, n * m);
    const Embedding e = embed(kd, K);
    const auto fK = map_form(e, fd);
    std::optional<FLine> l;
    if (K->order() <= kScanLimit) {
      l = first_line_exhaustive(*K, fK);
    } else {
      if (!phi && phi_usable) {
        const auto poly = line_point_polynomial(kd, fd);
        if (poly.is_zero())
          phi_usable = false;
        else
          phi = factor(poly);
      }
      if (!phi_usable) {
        l = first_line_exhaustive(*K, fK);
      } else {
        guided_levels.push_back(m);
        l = scan_plane_edges(*K, fK);
        for (const auto& [g, mult] : phi->factors) {
          if (l) break;
          if (m % g.degree() != 0) continue;
          for (Elem u : roots(e.map(g)))
            if ((l = scan_section(*K, fK, {1, u, 0, 0}))) break;
        }
      }
    }
    if (l) return {*l, m};
  }
  for (int m : guided_levels) {
    const FieldPtr K = FiniteField::get(p, n * m);
    if (auto l = first_line_exhaustive(*K, map_form(embed(kd, K), fd))) return {*l, m};
  }
  throw ExtensionBudgetError("no line found within the extension budget");
}

// Components of a singular plane conic, as pairs of points in plane
// coordinates; empty when the components are not defined over K.
// q = {xx, yy, zz, xy, xz, yz}.
std::vector<std::pair<FVec, FVec>> split_conic(const FiniteField& K, const std::array<Elem, 6>& q) {
  const Elem two = K.from_int(2);
  Mat<FiniteField> M = {{K.mul(two, q[0]), q[3], q[4]}, {q[3], K.mul(two, q[1]), q[5]}, {q[4], q[5], K.mul(two, q[2])}};
  auto ker = kernel(K, M, 3);
  if (ker.size() != 1) throw NotSmoothError();  // a double line or a smooth conic
  const FVec x0 = ker[0];
  auto Q = [&](const FVec& v) {
    return K.add(K.add(K.add(K.mul(q[0], K.mul(v[0], v[0])), K.mul(q[1], K.mul(v[1], v[1]))),
                       K.add(K.mul(q[2], K.mul(v[2], v[2])), K.mul(q[3], K.mul(v[0], v[1])))),
                 K.add(K.mul(q[4], K.mul(v[0], v[2])), K.mul(q[5], K.mul(v[1], v[2]))));
  };
  if (!K.is_zero(Q(x0))) throw std::logic_error("split_conic: conic is not singular");
  std::vector<FVec> comp;
  for (int i = 0; i < 3; ++i) {
    FVec e(3, 0);
    e[i] = 1;
    if (rank(K, Mat<FiniteField>{x0, e}) == 2 && (comp.empty() || rank(K, Mat<FiniteField>{x0, comp[0], e}) == 3))
      comp.push_back(e);
    if (comp.size() == 2) break;
  }
  const FVec &y1 = comp[0], &y2 = comp[1];
  FVec y12(3);
  for (int i = 0; i < 3; ++i) y12[i] = K.add(y1[i], y2[i]);
  // Q(s y1 + t y2) = alpha s^2 + beta s t + gamma t^2
  const Elem alpha = Q(y1), gamma = Q(y2);
  const Elem beta = K.sub(K.sub(Q(y12), alpha), gamma);
  std::vector<FVec> dirs;
  auto dir = [&](Elem s, Elem t) {
    FVec v(3);
    for (int i = 0; i < 3; ++i) v[i] = K.add(K.mul(s, y1[i]), K.mul(t, y2[i]));
    dirs.push_back(v);
  };
  if (K.is_zero(alpha)) {
    if (K.is_zero(beta)) throw NotSmoothError();
    dir(1, 0);
    dir(gamma, K.neg(beta));
  } else {
    auto rts = roots(poly_of(K, {gamma, beta, alpha}));
    if (rts.size() == 1 && K.is_zero(K.sub(K.mul(beta, beta), K.mul(K.mul(two, two), K.mul(alpha, gamma)))))
      throw NotSmoothError();
    for (Elem s : rts) dir(s, 1);
  }
  std::vector<std::pair<FVec, FVec>> out;
  for (const auto& d : dirs) out.push_back({x0, d});
  return out;
}

// Lines of the surface over K meeting l.
std::vector<FLine> lines_meeting(const FiniteField& K, const CubicForm<FiniteField>& f, const FLine& l) {
  const FVec A = l.row(0), B = l.row(1);
  const int pa = l.pivot(0, K), pb = l.pivot(1, K);
  std::vector<int> free;
  for (int j = 0; j < 4; ++j)
    if (j != pa && j != pb) free.push_back(j);
  FVec U1(4, 0), U2(4, 0);
  U1[free[0]] = 1;
  U2[free[1]] = 1;
  Mat<FiniteField> T(4, FVec(4, 0));
  for (int i = 0; i < 4; ++i) {
    T[i][0] = A[i];
    T[i][1] = B[i];
    T[i][2] = U1[i];
    T[i][3] = U2[i];
  }
  const auto g = substitute(K, f, T);
  for (int a = 0; a <= 3; ++a)
    if (!K.is_zero(g.coeff({a, 3 - a, 0, 0}))) throw std::logic_error("lines_meeting: line not on surface");
  // conic coefficient of x^a y^b z^(e-1), e = 3-a-b, as a polynomial in lambda
  // for the plane through l and lambda U1 + U2
  auto coef = [&](int a, int b) {
    const int e = 3 - a - b;
    std::vector<Elem> c(e + 1, 0);
    for (int cc = 0; cc <= e; ++cc) c[cc] = g.coeff({a, b, cc, e - cc});
    return poly_of(K, c);
  };
  const auto qa = coef(2, 0), qb = coef(0, 2), qc = coef(0, 0), qd = coef(1, 1), qe = coef(1, 0), qf = coef(0, 1);
  const auto four = Poly<FiniteField>::constant(K, K.from_int(4));
  const auto disc = four * qa * qb * qc + qd * qe * qf - qa * qf * qf - qb * qe * qe - qc * qd * qd;
  if (disc.is_zero()) throw NotSmoothError();
  std::vector<std::pair<std::array<Elem, 6>, FVec>> planes;  // conic, third basis vector
  auto at = [&](const Poly<FiniteField>& p, Elem lam) { return p.eval(lam); };
  for (Elem lam : roots(disc)) {
    FVec C(4);
    for (int i = 0; i < 4; ++i) C[i] = K.add(K.mul(lam, U1[i]), U2[i]);
    planes.push_back({{at(qa, lam), at(qb, lam), at(qc, lam), at(qd, lam), at(qe, lam), at(qf, lam)}, C});
  }
  if (disc.degree() < 5) {
    auto top = [&](const Poly<FiniteField>& p, int e) { return p.coeff(e); };
    planes.push_back({{top(qa, 1), top(qb, 1), top(qc, 3), top(qd, 1), top(qe, 2), top(qf, 2)}, U1});
  }
  std::vector<FLine> out;
  for (const auto& [q, C] : planes) {
    for (const auto& [u, v] : split_conic(K, q)) {
      FVec p(4), r(4);
      for (int i = 0; i < 4; ++i) {
        p[i] = K.add(K.add(K.mul(u[0], A[i]), K.mul(u[1], B[i])), K.mul(u[2], C[i]));
        r[i] = K.add(K.add(K.mul(v[0], A[i]), K.mul(v[1], B[i])), K.mul(v[2], C[i]));
      }
      out.push_back(FLine::span(K, p, r));
    }
  }
  return out;
}

std::vector<FLine> closure(const FiniteField& K, const CubicForm<FiniteField>& f, const FLine& start) {
  std::set<std::array<std::array<Elem, 4>, 2>> seen{start.rows};
  std::vector<FLine> lines{start};
  for (std::size_t i = 0; i < lines.size() && lines.size() < 27; ++i)
    for (const auto& m : lines_meeting(K, f, lines[i]))
      if (seen.insert(m.rows).second) lines.push_back(m);
  return lines;
}

FLine frobenius_image(const FiniteField& K, int base_degree, const FLine& l) {
  FLine r;
  for (int a = 0; a < 2; ++a)
    for (int j = 0; j < 4; ++j) r.rows[a][j] = K.frobenius(l.rows[a][j], base_degree);
  return r;
}

std::vector<int> frobenius_permutation(const LineSet& ls) {
  std::map<std::array<std::array<Elem, 4>, 2>, int> index;
  for (std::size_t i = 0; i < ls.lines.size(); ++i) index[ls.lines[i].rows] = static_cast<int>(i);
  std::vector<int> perm;
  for (const auto& l : ls.lines) {
    auto it = index.find(frobenius_image(*ls.ext, ls.base->degree(), l).rows);
    if (it == index.end()) throw std::logic_error("line set is not Frobenius-stable");
    perm.push_back(it->second);
  }
  return perm;
}

}  // namespace

LineSet all_27_lines(const FieldPtr& k, const CubicForm<FiniteField>& f, SolveOptions opt) {
  if (!is_smooth(*k, f)) throw NotSmoothError();
  const auto p = k->characteristic();
  const int n = k->degree();
  // Work in the default-modulus tower; base -> default field of the same order.
  const FieldPtr kd = FiniteField::get(p, n);
  const Embedding to_default = embed(k, kd);
  const auto fd = map_form(to_default, f);

  auto [found, level] = first_line(kd, fd, opt.max_extension);
  // bring the line down to its field of definition
  const FieldPtr Kl = FiniteField::get(p, n * level);
  const int d = definition_degree(*Kl, n, found);
  const FieldPtr Kd = FiniteField::get(p, n * d);
  FLine start_d = found;
  if (d != level) {
    const Embedding down = embed(Kd, Kl);
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 4; ++j) start_d.rows[a][j] = down.preimage(found.rows[a][j]).value();
  }

  for (int M = d; M <= opt.max_extension; M += d) {
    const FieldPtr KM = FiniteField::get(p, n * M);
    const auto fM = map_form(embed(kd, KM), fd);
    const Embedding up = embed(Kd, KM);
    FLine start;
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < 4; ++j) start.rows[a][j] = up(start_d.rows[a][j]);
    auto lines = closure(*KM, fM, start);
    if (lines.size() != 27) continue;
    LineSet ls;
    ls.base = k;
    ls.ext = KM;
    ls.ext_degree = M;
    const Embedding to_ext = embed(kd, KM);
    ls.embedding.emplace(k, KM, k->degree() == 1 ? KM->zero() : to_ext(to_default(k->gen())));
    std::sort(lines.begin(), lines.end(), [&](const auto& a, const auto& b) { return line_less(*KM, a, b); });
    ls.lines = std::move(lines);
    const auto perm = frobenius_permutation(ls);
    ls.min_degree.assign(27, 0);
    for (int i = 0; i < 27; ++i) {
      if (ls.min_degree[i]) continue;
      std::vector<int> cyc{i};
      for (int j = perm[i]; j != i; j = perm[j]) cyc.push_back(j);
      for (int j : cyc) ls.min_degree[j] = static_cast<int>(cyc.size());
    }
    return ls;
  }
  throw ExtensionBudgetError("27 lines not found within the extension budget");
}

std::vector<int> frobenius_action(const LineSet& ls) { return frobenius_permutation(ls); }

std::vector<int> frobenius_cycle_type(const LineSet& ls) {
  if (ls.lines.size() != 27) throw std::invalid_argument("frobenius_cycle_type: incomplete line set");
  const auto perm = frobenius_permutation(ls);
  std::vector<bool> done(27, false);
  std::vector<int> type;
  for (int i = 0; i < 27; ++i) {
    if (done[i]) continue;
    int len = 0;
    for (int j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

int fixed_by_power(const std::vector<int>& cycle_type, int k) {
  int n = 0;
  for (int c : cycle_type)
    if (k % c == 0) n += c;
  return n;
}

}  // namespace cubic
