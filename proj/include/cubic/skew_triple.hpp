#ifndef CUBIC_SKEW_TRIPLE_HPP
#define CUBIC_SKEW_TRIPLE_HPP

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/cubic_form.hpp"
#include "cubic/factor.hpp"
#include "cubic/proj_geom.hpp"
#include "cubic/rational.hpp"
#include "cubic/surface.hpp"

namespace cubic {

// Surfaces through E1 = V(x0,x1), E2 = V(x2,x3), E3 = V(x0-x2, x1-x3).
// a_ijkl is the coefficient of x0^i x1^j x2^k x3^l.
enum SkewCoeff {
  kA0201, kA0102, kA2010, kA1020, kA0210, kA1002,
  kA1101, kA0111, kA0120, kA2001, kA1011, kA1110,
};

const std::array<const char*, 12>& skew_coeff_names();
const std::array<Exps, 12>& skew_coeff_exps();

class SkewTripleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A case the line geometry rules out; seeing one means an arithmetic bug.
class ImpossibleCaseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A vanishing denominator in the h(s) chain, named in what().
class PivotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class F>
struct SkewTripleForm {
  using Elem = typename F::Elem;
  std::array<Elem, 12> a;
  const Elem& operator[](int i) const { return a[i]; }
};

template <class F>
bool skew_relations_hold(const F& k, const std::array<typename F::Elem, 12>& a) {
  auto sum = [&](std::initializer_list<int> idx) {
    auto s = k.zero();
    for (int i : idx) s = k.add(s, a[i]);
    return s;
  };
  return k.is_zero(sum({kA0201, kA0102})) && k.is_zero(sum({kA2010, kA1020})) &&
         k.is_zero(sum({kA0210, kA1002, kA1101, kA0111})) &&
         k.is_zero(sum({kA0120, kA2001, kA1011, kA1110}));
}

template <class F>
SkewTripleForm<F> skew_form_from_coeffs(const F& k, const std::vector<typename F::Elem>& c) {
  if (c.size() != 12) throw std::invalid_argument("a skew-triple form has 12 coefficients");
  SkewTripleForm<F> s;
  for (int i = 0; i < 12; ++i) s.a[i] = c[i];
  if (!skew_relations_hold(k, s.a))
    throw SkewTripleError("coefficients violate the skew-triple relations");
  return s;
}

// Eight free values a0201, a2010, a0210, a1002, a1101, a0120, a2001, a1011;
// the other four follow from the relations.
template <class F>
SkewTripleForm<F> skew_form_from_free(const F& k, const std::array<typename F::Elem, 8>& v) {
  SkewTripleForm<F> s;
  s.a[kA0201] = v[0];
  s.a[kA2010] = v[1];
  s.a[kA0210] = v[2];
  s.a[kA1002] = v[3];
  s.a[kA1101] = v[4];
  s.a[kA0120] = v[5];
  s.a[kA2001] = v[6];
  s.a[kA1011] = v[7];
  s.a[kA0102] = k.neg(v[0]);
  s.a[kA1020] = k.neg(v[1]);
  s.a[kA0111] = k.neg(k.add(k.add(v[2], v[3]), v[4]));
  s.a[kA1110] = k.neg(k.add(k.add(v[5], v[6]), v[7]));
  return s;
}

template <class F>
CubicForm<F> to_cubic(const F& k, const SkewTripleForm<F>& s) {
  auto f = CubicForm<F>::zero(k);
  for (int i = 0; i < 12; ++i) f.coeff(skew_coeff_exps()[i]) = s.a[i];
  return f;
}

// Reads the 12 coefficients of a form already in standard position.
template <class F>
SkewTripleForm<F> from_cubic(const F& k, const CubicForm<F>& f) {
  auto rest = f;
  SkewTripleForm<F> s;
  for (int i = 0; i < 12; ++i) {
    s.a[i] = f.coeff(skew_coeff_exps()[i]);
    rest.coeff(skew_coeff_exps()[i]) = k.zero();
  }
  if (!rest.is_zero(k) || !skew_relations_hold(k, s.a))
    throw SkewTripleError("form does not contain the standard skew triple");
  return s;
}

// Coordinates y with x = T y; f(T y) contains the standard triple.
template <class F>
struct StandardEmbedding {
  SkewTripleForm<F> form;
  Mat<F> T;
  Mat<F> T_inv;
};

// Sends l1 -> E1, l2 -> E2, l3 -> E3.
template <class F>
StandardEmbedding<F> embed_standard(const F& k, const CubicForm<F>& f, const LineP3<F>& l1,
                                    const LineP3<F>& l2, const LineP3<F>& l3) {
  for (const auto* l : {&l1, &l2, &l3})
    if (!line_in_surface(k, f, *l)) throw SkewTripleError("line not on the surface");
  if (l1 == l2 || l1 == l3 || l2 == l3 || lines_intersect(k, l1, l2) || lines_intersect(k, l1, l3) ||
      lines_intersect(k, l2, l3))
    throw SkewTripleError("lines not skew");
  // Columns: basis of l2 then l1; decompose the basis of l3 along l2 + l1.
  Mat<F> M(4, Vec<F>(4, k.zero()));
  for (int i = 0; i < 4; ++i) {
    M[i][0] = l2.rows[0][i];
    M[i][1] = l2.rows[1][i];
    M[i][2] = l1.rows[0][i];
    M[i][3] = l1.rows[1][i];
  }
  const Mat<F> Minv = inverse(k, M);
  std::array<Vec<F>, 2> part2, part1;
  for (int r = 0; r < 2; ++r) {
    const Vec<F> p = l3.row(r);
    Vec<F> c(4, k.zero());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) c[i] = k.add(c[i], k.mul(Minv[i][j], p[j]));
    part2[r] = Vec<F>(4, k.zero());
    part1[r] = Vec<F>(4, k.zero());
    for (int i = 0; i < 4; ++i) {
      part2[r][i] = k.add(k.mul(c[0], M[i][0]), k.mul(c[1], M[i][1]));
      part1[r][i] = k.add(k.mul(c[2], M[i][2]), k.mul(c[3], M[i][3]));
    }
  }
  StandardEmbedding<F> e;
  e.T.assign(4, Vec<F>(4, k.zero()));
  const std::array<const Vec<F>*, 4> cols{&part2[0], &part2[1], &part1[0], &part1[1]};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e.T[i][j] = (*cols[j])[i];
  e.T_inv = inverse(k, e.T);
  e.form = from_cubic(k, substitute(k, f, e.T));
  return e;
}

// First pairwise-skew triple among the rational lines, in line order.
StandardEmbedding<FiniteField> embed_standard(const FieldPtr& k, const CubicForm<FiniteField>& f);

template <class F>
Poly<F> g_of(const F& k, const SkewTripleForm<F>& s) {
  if (k.is_zero(s[kA2010]))
    throw SkewTripleError("a2010 = 0: a line of the pencil lies at infinity; re-coordinate");
  return Poly<F>(k, {s[kA0201], k.add(s[kA0210], s[kA1101]), k.add(s[kA2001], s[kA1110]), s[kA2010]});
}

// Monic h(s) for roots t4, t5 of g, coefficients already in E.
template <class E>
Poly<E> h_of(const E& K, const std::array<typename E::Elem, 12>& a, const typename E::Elem& t4,
             const typename E::Elem& t5) {
  using Elem = typename E::Elem;
  if (K.eq(t4, t5)) throw PivotError("t4 = t5");
  auto l3 = [&](const Elem& t) -> std::array<Elem, 3> {
    return {K.add(K.mul(K.add(K.mul(a[kA2010], t), a[kA1110]), t), a[kA0210]),
            K.add(K.mul(a[kA2010], t), K.add(a[kA0120], a[kA1110])),
            K.sub(K.mul(a[kA2001], t), a[kA1002])};
  };
  const auto c = l3(t4), d = l3(t5);
  const Elem den = K.add(c[2], K.mul(c[1], t4));
  if (K.is_zero(c[0])) throw PivotError("c1 = 0");
  if (K.is_zero(d[0])) throw PivotError("d1 = 0");
  if (K.is_zero(den)) throw PivotError("c3 + c2*t4 = 0");
  const Elem dt = K.sub(t4, t5);
  const Elem u1 = K.div(dt, c[0]);
  const Elem u2 = K.neg(K.div(K.add(c[2], K.mul(c[1], t5)), den));
  const Elem u3 = K.div(dt, den);
  const Elem r = K.div(c[0], K.mul(d[0], den));
  const Elem v2 = K.mul(r, K.sub(K.mul(d[1], c[2]), K.mul(d[2], c[1])));
  const Elem v3 = K.neg(K.mul(r, K.add(K.mul(d[1], t4), d[2])));
  if (K.is_zero(v2)) throw PivotError("v2 = 0");
  Poly<E> h(K, {K.sub(K.mul(u1, v3), u3), K.add(K.sub(K.mul(u1, v2), u2), v3), v2});
  return h.monic();
}

struct ClassifyReport {
  std::string field;
  std::string chart = "identity";  // coordinate change applied before g, h
  std::string g;
  std::vector<int> g_factor_degrees;
  std::string t4, t5, t5_field;
  std::string h;                   // monic; empty when not computed
  int rational_s_roots = -1;
  std::string case_tag;            // "1", "2a", "2c", "3a", "3c"
  std::optional<int> count;
  std::vector<int> candidates;
  std::string resolved_by;         // "g,h", "enumeration" or "" (undecided)
  std::vector<std::string> transcript;
};

ClassifyReport classify(const SkewTripleForm<RationalField>& s);
ClassifyReport classify(const FieldPtr& k, const SkewTripleForm<FiniteField>& s);

std::string report_json(const ClassifyReport& r);

// Smooth random form with the standard triple.
SkewTripleForm<FiniteField> random_smooth_skew_form(const FiniteField& k, std::mt19937_64& rng);

}  // namespace cubic

#endif  // CUBIC_SKEW_TRIPLE_HPP
