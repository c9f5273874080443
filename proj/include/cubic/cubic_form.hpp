#ifndef CUBIC_CUBIC_FORM_HPP
#define CUBIC_CUBIC_FORM_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "cubic/linalg.hpp"
#include "cubic/poly.hpp"
#include "cubic/text_format.hpp"

namespace cubic {

using Exps = std::array<int, 4>;

// The 20 cubic monomials, exponent tuples in descending lex order:
// x0^3, x0^2x1, x0^2x2, x0^2x3, x0x1^2, ...
const std::array<Exps, 20>& cubic_monomials();
int cubic_index(const Exps& e);
std::string monomial_text(const Exps& e);

template <class F>
struct CubicForm {
  using Elem = typename F::Elem;
  std::array<Elem, 20> c;

  static CubicForm zero(const F& k) {
    CubicForm f;
    f.c.fill(k.zero());
    return f;
  }
  const Elem& coeff(const Exps& e) const { return c[cubic_index(e)]; }
  Elem& coeff(const Exps& e) { return c[cubic_index(e)]; }
  bool is_zero(const F& k) const {
    for (const auto& x : c)
      if (!k.is_zero(x)) return false;
    return true;
  }
  friend bool operator==(const CubicForm& a, const CubicForm& b) { return a.c == b.c; }
};

template <class F>
typename F::Elem evaluate(const F& k, const CubicForm<F>& f, const Vec<F>& p) {
  const auto& mons = cubic_monomials();
  auto r = k.zero();
  for (int m = 0; m < 20; ++m) {
    if (k.is_zero(f.c[m])) continue;
    auto t = f.c[m];
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < mons[m][i]; ++e) t = k.mul(t, p[i]);
    r = k.add(r, t);
  }
  return r;
}

// Partial derivatives evaluated at p.
template <class F>
Vec<F> gradient(const F& k, const CubicForm<F>& f, const Vec<F>& p) {
  const auto& mons = cubic_monomials();
  Vec<F> g(4, k.zero());
  for (int m = 0; m < 20; ++m) {
    if (k.is_zero(f.c[m])) continue;
    for (int i = 0; i < 4; ++i) {
      const int ei = mons[m][i];
      if (ei == 0) continue;
      auto t = k.mul(f.c[m], k.from_int(ei));
      for (int j = 0; j < 4; ++j)
        for (int e = 0; e < mons[m][j] - (j == i); ++e) t = k.mul(t, p[j]);
      g[i] = k.add(g[i], t);
    }
  }
  return g;
}

template <class F>
typename F::Elem dot(const F& k, const Vec<F>& a, const Vec<F>& b) {
  auto r = k.zero();
  for (std::size_t i = 0; i < a.size(); ++i) r = k.add(r, k.mul(a[i], b[i]));
  return r;
}

// Coefficients of t^0..t^3 in f(p + t r). The middle ones are the polar
// forms, valid in every characteristic.
template <class F>
std::array<typename F::Elem, 4> restrict_to_line(const F& k, const CubicForm<F>& f, const Vec<F>& p,
                                                 const Vec<F>& r) {
  return {evaluate(k, f, p), dot(k, gradient(k, f, p), r), dot(k, gradient(k, f, r), p), evaluate(k, f, r)};
}

// g(y) = f(T y): substitute x_i = sum_j T[i][j] y_j.
template <class F>
CubicForm<F> substitute(const F& k, const CubicForm<F>& f, const Mat<F>& T) {
  const auto& mons = cubic_monomials();
  auto g = CubicForm<F>::zero(k);
  for (int m = 0; m < 20; ++m) {
    if (k.is_zero(f.c[m])) continue;
    int vars[3], n = 0;
    for (int i = 0; i < 4; ++i)
      for (int e = 0; e < mons[m][i]; ++e) vars[n++] = i;
    for (int a = 0; a < 4; ++a) {
      const auto ta = T[vars[0]][a];
      if (k.is_zero(ta)) continue;
      const auto ca = k.mul(f.c[m], ta);
      for (int b = 0; b < 4; ++b) {
        const auto tb = T[vars[1]][b];
        if (k.is_zero(tb)) continue;
        const auto cb = k.mul(ca, tb);
        for (int d = 0; d < 4; ++d) {
          const auto td = T[vars[2]][d];
          if (k.is_zero(td)) continue;
          Exps e{0, 0, 0, 0};
          ++e[a];
          ++e[b];
          ++e[d];
          auto& slot = g.coeff(e);
          slot = k.add(slot, k.mul(cb, td));
        }
      }
    }
  }
  return g;
}

// Partial derivative in x_i as a quadratic: coefficients indexed by the
// cubic monomial x_i * (quadratic monomial); returns a map exps -> coeff.
template <class F>
std::vector<std::pair<Exps, typename F::Elem>> partial(const F& k, const CubicForm<F>& f, int i) {
  std::vector<std::pair<Exps, typename F::Elem>> out;
  const auto& mons = cubic_monomials();
  for (int m = 0; m < 20; ++m) {
    if (mons[m][i] == 0) continue;
    const auto c = k.mul(f.c[m], k.from_int(mons[m][i]));
    if (k.is_zero(c)) continue;
    Exps e = mons[m];
    --e[i];
    out.push_back({e, c});
  }
  return out;
}

template <class F>
CubicForm<F> parse_cubic(const F& k, std::string_view text) {
  static const std::vector<std::string> vars{"x0", "x1", "x2", "x3"};
  auto sp = parse_expression(k, text, vars);
  auto f = CubicForm<F>::zero(k);
  for (const auto& [m, c] : sp) {
    if (m[0] + m[1] + m[2] + m[3] != 3) throw ParseError("cubic form must be homogeneous of degree 3", 0);
    f.coeff({m[0], m[1], m[2], m[3]}) = c;
  }
  return f;
}

template <class F>
CubicForm<F> cubic_from_coeffs(const F& k, const std::vector<typename F::Elem>& c) {
  if (c.size() != 20) throw std::invalid_argument("a cubic form has 20 coefficients");
  auto f = CubicForm<F>::zero(k);
  for (int i = 0; i < 20; ++i) f.c[i] = c[i];
  return f;
}

template <class F>
std::string to_string(const F& k, const CubicForm<F>& f) {
  std::string out;
  for (int m = 0; m < 20; ++m) append_term(out, k, f.c[m], monomial_text(cubic_monomials()[m]));
  return out.empty() ? "0" : out;
}

}  // namespace cubic

#endif  // CUBIC_CUBIC_FORM_HPP
