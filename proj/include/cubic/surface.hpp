#ifndef CUBIC_SURFACE_HPP
#define CUBIC_SURFACE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubic/cubic_form.hpp"
#include "cubic/embed.hpp"
#include "cubic/groebner.hpp"
#include "cubic/proj_geom.hpp"

namespace cubic {

// Algebraic containment: f(p + t r) vanishes identically in t.
template <class F>
bool line_in_surface(const F& k, const CubicForm<F>& f, const LineP3<F>& l) {
  for (const auto& c : restrict_to_line(k, f, l.row(0), l.row(1)))
    if (!k.is_zero(c)) return false;
  return true;
}

// Every rational point of l lies on f.
bool line_in_surface_setwise(const FiniteField& k, const CubicForm<FiniteField>& f,
                             const LineP3<FiniteField>& l);

// Lines over an extension F_{q^m} of the base field, each with the degree
// of its minimal field of definition over the base.
struct LineSet {
  FieldPtr base;
  FieldPtr ext;
  int ext_degree = 1;
  std::optional<Embedding> embedding;  // base -> ext used for the lines
  std::vector<LineP3<FiniteField>> lines;
  std::vector<int> min_degree;
};

class NotSmoothError : public std::invalid_argument {
 public:
  NotSmoothError() : std::invalid_argument("surface is not smooth") {}
};

// Counts a smooth cubic surface can carry over a finite field.
bool is_admissible_line_count(int n);

// All F_q-lines on a smooth surface, ascending. Refuses singular input.
LineSet rational_lines(const FieldPtr& k, const CubicForm<FiniteField>& f);
// Same, skipping the smoothness check (the caller vouches for it).
std::vector<LineP3<FiniteField>> contained_lines(const FiniteField& k, const CubicForm<FiniteField>& f);

struct SolveOptions {
  int max_extension = 12;
};

class ExtensionBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The 27 lines over the smallest extension defining all of them.
LineSet all_27_lines(const FieldPtr& k, const CubicForm<FiniteField>& f, SolveOptions opt = {});

// Nonzero polynomial over the base vanishing at u for each point [1:u:w:0]
// where a line (1,u,w,0) + t(0,1,s,v) of f passes with df/dx3 nonzero
// there; zero when the elimination degenerates. Guides the search for a
// first line in large extensions.
Poly<FiniteField> line_point_polynomial(const FieldPtr& k, const CubicForm<FiniteField>& f);

// Frobenius (q-th power over the base) as a permutation of ls.lines.
std::vector<int> frobenius_action(const LineSet& ls);
// Cycle lengths of Frobenius on a complete line set, descending.
std::vector<int> frobenius_cycle_type(const LineSet& ls);
// Number of lines fixed by the k-th power of Frobenius.
int fixed_by_power(const std::vector<int>& cycle_type, int k);

// Image of a cubic under a field embedding.
CubicForm<FiniteField> map_form(const Embedding& e, const CubicForm<FiniteField>& f);

// Third line in the plane of two meeting lines on f.
template <class F>
LineP3<F> residual_line(const F& k, const CubicForm<F>& f, const LineP3<F>& l1, const LineP3<F>& l2) {
  auto meet = lines_meet(k, l1, l2);
  if (meet.kind != Meet::kMeet) throw std::invalid_argument("residual_line: lines must meet");
  const Vec<F> A = l1.row(0), B = l1.row(1);
  Vec<F> C = l2.row(0);
  if (point_on_line(k, C, l1)) C = l2.row(1);
  // meeting point = alpha A + beta B
  Mat<F> sys(4, Vec<F>(3, k.zero()));
  for (int j = 0; j < 4; ++j) {
    sys[j][0] = A[j];
    sys[j][1] = B[j];
    sys[j][2] = k.neg(meet.point->c[j]);
  }
  auto ker = kernel(k, sys, 3);
  const auto alpha = k.div(ker.at(0)[0], ker[0][2]);
  const auto beta = k.div(ker[0][1], ker[0][2]);
  Mat<F> T(4, Vec<F>(4, k.zero()));
  for (int i = 0; i < 4; ++i) {
    T[i][0] = A[i];
    T[i][1] = B[i];
    T[i][2] = C[i];
  }
  const auto g = substitute(k, f, T);
  auto q = [&](int a, int b) { return g.coeff({a, b, 3 - a - b, 0}); };
  // (beta x - alpha y)(u x + v y + w z) = Q(x, y, z) = g(x, y, z) / z
  const auto zero = k.zero();
  Mat<F> m = {
      {beta, zero, zero, q(2, 0)},
      {zero, k.neg(alpha), zero, q(0, 2)},
      {zero, zero, zero, q(0, 0)},
      {k.neg(alpha), beta, zero, q(1, 1)},
      {zero, zero, beta, q(1, 0)},
      {zero, zero, k.neg(alpha), q(0, 1)},
  };
  const auto piv = rref(k, m);
  if (piv.size() != 3 || piv[2] != 2) throw std::logic_error("residual_line: plane section does not factor");
  const Vec<F> l3{m[0][3], m[1][3], m[2][3]};
  auto pts = kernel(k, Mat<F>{l3}, 3);
  if (pts.size() != 2) throw std::logic_error("residual_line: degenerate residual");
  Vec<F> p(4, k.zero()), r(4, k.zero());
  for (int j = 0; j < 4; ++j) {
    p[j] = k.add(k.add(k.mul(pts[0][0], A[j]), k.mul(pts[0][1], B[j])), k.mul(pts[0][2], C[j]));
    r[j] = k.add(k.add(k.mul(pts[1][0], A[j]), k.mul(pts[1][1], B[j])), k.mul(pts[1][2], C[j]));
  }
  return LineP3<F>::span(k, p, r);
}

}  // namespace cubic

#endif  // CUBIC_SURFACE_HPP
