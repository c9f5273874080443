#ifndef CUBIC_PROJ_GEOM_HPP
#define CUBIC_PROJ_GEOM_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/finite_field.hpp"
#include "cubic/linalg.hpp"

namespace cubic {

template <class F>
bool vec_less(const F& k, const Vec<F>& a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (k.less(a[i], b[i])) return true;
    if (k.less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

// Point of P^2 or P^3, scaled so the first nonzero coordinate is 1.
template <class F>
struct ProjPoint {
  Vec<F> c;

  static ProjPoint make(const F& k, Vec<F> v) {
    auto it = std::find_if(v.begin(), v.end(), [&](const auto& x) { return !k.is_zero(x); });
    if (it == v.end()) throw std::invalid_argument("zero vector is not a projective point");
    const auto inv = k.inv(*it);
    for (auto& x : v) x = k.mul(x, inv);
    return ProjPoint{std::move(v)};
  }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
};

template <class F>
std::string to_string(const F& k, const ProjPoint<F>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.c.size(); ++i) s += (i ? ":" : "") + k.to_string(p.c[i]);
  return s + "]";
}

// Line of P^3 as the row space of a 2x4 matrix in reduced row echelon form.
template <class F>
struct LineP3 {
  using Elem = typename F::Elem;
  std::array<std::array<Elem, 4>, 2> rows;

  static LineP3 span(const F& k, const Vec<F>& p, const Vec<F>& q) {
    Mat<F> m{p, q};
    if (rref(k, m).size() != 2) throw std::invalid_argument("points do not span a line");
    LineP3 l;
    for (int r = 0; r < 2; ++r)
      for (int j = 0; j < 4; ++j) l.rows[r][j] = m[r][j];
    return l;
  }
  // Common zero locus of two independent linear forms.
  static LineP3 from_equations(const F& k, const Vec<F>& l1, const Vec<F>& l2) {
    auto ker = kernel(k, Mat<F>{l1, l2}, 4);
    if (ker.size() != 2) throw std::invalid_argument("linear forms are dependent");
    return span(k, ker[0], ker[1]);
  }

  Vec<F> row(int r) const { return Vec<F>(rows[r].begin(), rows[r].end()); }
  int pivot(int r, const F& k) const {
    for (int j = 0; j < 4; ++j)
      if (!k.is_zero(rows[r][j])) return j;
    return -1;
  }
  // Two independent linear forms cutting out the line.
  Mat<F> equations(const F& k) const { return kernel(k, Mat<F>{row(0), row(1)}, 4); }

  friend bool operator==(const LineP3& a, const LineP3& b) { return a.rows == b.rows; }
  friend bool operator!=(const LineP3& a, const LineP3& b) { return !(a == b); }
};

template <class F>
bool line_less(const F& k, const LineP3<F>& a, const LineP3<F>& b) {
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < 4; ++j) {
      if (k.less(a.rows[r][j], b.rows[r][j])) return true;
      if (k.less(b.rows[r][j], a.rows[r][j])) return false;
    }
  return false;
}

template <class F>
std::string to_string(const F& k, const LineP3<F>& l) {
  std::string s = "[";
  for (int r = 0; r < 2; ++r) {
    s += r ? ",[" : "[";
    for (int j = 0; j < 4; ++j) s += (j ? "," : "") + k.to_string(l.rows[r][j]);
    s += "]";
  }
  return s + "]";
}

enum class Meet { kSkew, kMeet, kIdentical };

template <class F>
struct MeetResult {
  Meet kind;
  std::optional<ProjPoint<F>> point;  // set iff kind == kMeet
};

template <class F>
MeetResult<F> lines_meet(const F& k, const LineP3<F>& a, const LineP3<F>& b) {
  if (a == b) return {Meet::kIdentical, std::nullopt};
  Mat<F> m{a.row(0), a.row(1), b.row(0), b.row(1)};
  if (!k.is_zero(det(k, m))) return {Meet::kSkew, std::nullopt};
  // s0 a0 + s1 a1 = t0 b0 + t1 b1: kernel of the transpose.
  Mat<F> t(4, Vec<F>(4, k.zero()));
  for (int j = 0; j < 4; ++j) {
    t[j][0] = a.rows[0][j];
    t[j][1] = a.rows[1][j];
    t[j][2] = k.neg(b.rows[0][j]);
    t[j][3] = k.neg(b.rows[1][j]);
  }
  auto ker = kernel(k, t, 4);
  const auto& s = ker.at(0);
  Vec<F> p(4, k.zero());
  for (int j = 0; j < 4; ++j) p[j] = k.add(k.mul(s[0], a.rows[0][j]), k.mul(s[1], a.rows[1][j]));
  return {Meet::kMeet, ProjPoint<F>::make(k, p)};
}

template <class F>
bool lines_intersect(const F& k, const LineP3<F>& a, const LineP3<F>& b) {
  if (a == b) return false;
  return k.is_zero(det(k, Mat<F>{a.row(0), a.row(1), b.row(0), b.row(1)}));
}

template <class F>
bool point_on_line(const F& k, const Vec<F>& p, const LineP3<F>& l) {
  return rank(k, Mat<F>{l.row(0), l.row(1), p}) == 2;
}

template <class F>
void require_distinct(const std::vector<ProjPoint<F>>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("repeated point");
}

template <class F>
bool collinear(const F& k, const ProjPoint<F>& p, const ProjPoint<F>& q, const ProjPoint<F>& r) {
  require_distinct<F>({p, q, r});
  return k.is_zero(det(k, Mat<F>{p.c, q.c, r.c}));
}

template <class F>
bool on_common_conic(const F& k, const std::vector<ProjPoint<F>>& pts) {
  if (pts.size() != 6) throw std::invalid_argument("on_common_conic needs six points");
  require_distinct(pts);
  Mat<F> m;
  for (const auto& p : pts) {
    const auto &x = p.c[0], &y = p.c[1], &z = p.c[2];
    m.push_back({k.mul(x, x), k.mul(x, y), k.mul(y, y), k.mul(x, z), k.mul(y, z), k.mul(z, z)});
  }
  return k.is_zero(det(k, m));
}

// Rational points of P^n(F_q), canonical, ascending.
std::vector<Vec<FiniteField>> projective_points(const FiniteField& k, int n);

// The q+1 rational points of a line, canonical.
std::vector<Vec<FiniteField>> rational_points(const FiniteField& k, const LineP3<FiniteField>& l);

// Calls fn on every line of P^3(F_q) in RREF; order is by pivot pattern.
void for_each_line_p3(const FiniteField& k, const std::function<void(const LineP3<FiniteField>&)>& fn);

// All lines of P^3(F_q), ascending in the entrywise lex order.
std::vector<LineP3<FiniteField>> enumerate_lines_p3(const FiniteField& k);

inline std::uint64_t line_count_p3(std::uint64_t q) { return (q * q + 1) * (q * q + q + 1); }

}  // namespace cubic

#endif  // CUBIC_PROJ_GEOM_HPP
