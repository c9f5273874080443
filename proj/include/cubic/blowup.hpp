#ifndef CUBIC_BLOWUP_HPP
#define CUBIC_BLOWUP_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/char2.hpp"
#include "cubic/cubic_form.hpp"
#include "cubic/graph.hpp"
#include "cubic/linalg.hpp"

namespace cubic {

// Degrees of the Galois orbits of the six blown-up points, in the order the
// points are numbered (item 6 is p1 | p2 p3 p4 | p5 p6).
struct GaloisPattern {
  int item = 0;  // 1..11
  std::vector<int> degrees;
};

const std::vector<GaloisPattern>& example_patterns();
const GaloisPattern& pattern_item(int item);
// Matches a degree multiset; case_tag "skew" or "meet" must agree with the
// three-line patterns when given.
GaloisPattern pattern_from_degrees(const std::vector<int>& degrees, const std::string& case_tag = "");
std::string pattern_text(const GaloisPattern& p);

struct PredictedLines {
  int count = 0;
  std::vector<int> labels;  // model labels fixed by the pattern permutation
  Graph graph;
};
PredictedLines predicted_count(const GaloisPattern& p);

using PlaneExps = std::array<int, 3>;
// x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
const std::array<PlaneExps, 10>& plane_cubic_monomials();

template <class F>
using PlaneCubic = std::array<typename F::Elem, 10>;

// deg f linear conditions saying a plane cubic vanishes at the points
// [1:t:t^3], f(t) = 0: the coefficients of c(1, t, t^3) mod f.
template <class F>
Mat<F> orbit_conditions(const F& k, const Poly<F>& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("orbit_conditions: factor must have positive degree");
  std::vector<Poly<F>> tp{Poly<F>::constant(k, k.one())};
  for (int i = 1; i <= 9; ++i) tp.push_back((tp.back() * Poly<F>::x(k)) % f);
  Mat<F> rows(d, Vec<F>(10, k.zero()));
  const auto& mons = plane_cubic_monomials();
  for (int m = 0; m < 10; ++m) {
    const auto& r = tp[mons[m][1] + 3 * mons[m][2]];
    for (int i = 0; i < d; ++i) rows[i][m] = r.coeff(i);
  }
  return rows;
}

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Echelon basis of the plane cubics satisfying the conditions; the kernel
// must have dimension 4.
template <class F>
std::vector<PlaneCubic<F>> cubics_from_conditions(const F& k, Mat<F> m) {
  auto ker = kernel(k, std::move(m), 10);
  if (ker.size() != 4)
    throw ConstructionError("cubics through the points: kernel dimension " + std::to_string(ker.size()) + ", expected 4");
  rref(k, ker);
  std::vector<PlaneCubic<F>> out;
  for (const auto& v : ker) {
    PlaneCubic<F> c;
    std::copy(v.begin(), v.end(), c.begin());
    out.push_back(c);
  }
  return out;
}

// Plane cubics through the points cut out by the factors.
template <class F>
std::vector<PlaneCubic<F>> cubics_through(const F& k, const std::vector<Poly<F>>& factors) {
  Mat<F> m;
  for (const auto& f : factors)
    for (auto& row : orbit_conditions(k, f)) m.push_back(std::move(row));
  return cubics_from_conditions(k, std::move(m));
}

// The cubic relation among the four plane cubics: the surface they map P^2 onto.
template <class F>
CubicForm<F> anticanonical_image(const F& k, const std::vector<PlaneCubic<F>>& basis) {
  if (basis.size() != 4) throw std::invalid_argument("anticanonical_image: need four cubics");
  // plane forms stored on a (deg+1)^2 grid indexed by the exponents of y, z
  using Grid = std::vector<typename F::Elem>;
  auto lift = [&](const PlaneCubic<F>& c) {
    Grid g(16, k.zero());
    const auto& mons = plane_cubic_monomials();
    for (int m = 0; m < 10; ++m) g[mons[m][1] * 4 + mons[m][2]] = c[m];
    return g;
  };
  auto mul = [&](const Grid& a, int da, const Grid& b, int db) {
    const int w = da + db + 1;
    Grid r(w * w, k.zero());
    for (int i = 0; i <= da; ++i)
      for (int j = 0; i + j <= da; ++j) {
        const auto& x = a[i * (da + 1) + j];
        if (k.is_zero(x)) continue;
        for (int u = 0; u <= db; ++u)
          for (int v = 0; u + v <= db; ++v) {
            auto& t = r[(i + u) * w + j + v];
            t = k.add(t, k.mul(x, b[u * (db + 1) + v]));
          }
      }
    return r;
  };
  std::array<Grid, 4> g;
  for (int i = 0; i < 4; ++i) g[i] = lift(basis[i]);
  Mat<F> m(100, Vec<F>(20, k.zero()));
  const auto& cm = cubic_monomials();
  for (int c = 0; c < 20; ++c) {
    std::vector<int> idx;
    for (int v = 0; v < 4; ++v)
      for (int e = 0; e < cm[c][v]; ++e) idx.push_back(v);
    const Grid prod = mul(mul(g[idx[0]], 3, g[idx[1]], 3), 6, g[idx[2]], 3);
    for (int r = 0; r < 100; ++r) m[r][c] = prod[r];
  }
  auto ker = kernel(k, std::move(m), 20);
  if (ker.size() != 1)
    throw ConstructionError("anticanonical image: " + std::to_string(ker.size()) + " cubic relations, expected 1");
  return cubic_from_coeffs(k, ker[0]);
}

// Conditions (i)-(iv) on the sextic G with the required factor degrees.
struct SexticCheck {
  bool squarefree = false;
  bool quintic_term = false;
  bool triple_sum_free = false;
  bool factor_degrees = false;
  bool ok() const { return squarefree && quintic_term && triple_sum_free && factor_degrees; }
  std::string failed() const;
};
SexticCheck check_sextic(const QPoly& G, const std::vector<int>& degrees);
SexticCheck check_sextic(const FqPoly& G, const FieldPtr& k, const std::vector<int>& degrees);

// The eleven sextics over Q, one per pattern.
const std::vector<std::string>& rational_sextic_texts();
QPoly rational_sextic(int item);

struct Construction {
  GaloisPattern pattern;
  FieldPtr field;
  std::string source;  // curve, points or fixed
  std::optional<FqPoly> G;
  std::vector<FqPoly> factors;
  std::string point_field;                         // field holding the point coordinates
  std::vector<std::vector<std::string>> orbits;    // points, one list per orbit
  std::vector<PlaneCubic<FiniteField>> cubics;
  CubicForm<FiniteField> surface;
  std::vector<std::string> transcript;
};

// Tries, in order: the char-2 recipes, a search for G on the curve
// [1:t:t^3], the fixed 27-line surface over F_8, and a search over point
// orbits in general position.
Construction construct_surface(const FieldPtr& k, const GaloisPattern& p);

struct RationalConstruction {
  GaloisPattern pattern;
  QPoly G;
  std::vector<QPoly> factors;
  std::vector<PlaneCubic<RationalField>> cubics;
  CubicForm<RationalField> surface;  // integer, primitive
};
RationalConstruction construct_rational(const GaloisPattern& p);

struct CrossCheck {
  int predicted = 0;
  int enumerated = -1;
  bool smooth = false;
  bool graph_isomorphic = false;
  bool ok() const { return smooth && predicted == enumerated && graph_isomorphic; }
};
CrossCheck cross_validate(const Construction& c);

// Reduction of an integral cubic modulo the characteristic of Fp.
CubicForm<FiniteField> reduce_mod(const FiniteField& Fp, const CubicForm<RationalField>& f);

}  // namespace cubic

#endif  // CUBIC_BLOWUP_HPP
