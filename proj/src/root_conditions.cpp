#include "cubic/root_conditions.hpp"

#include <stdexcept>

namespace cubic {

namespace {

const RationalField& Qf() { return RationalField::instance(); }

QPoly qconst(const mpq_class& c) { return QPoly::constant(Qf(), c); }

// G(c - y) as a polynomial in y.
QPoly reflect_shift(const QPoly& G, const mpq_class& c) {
  return G.compose(QPoly(Qf(), {c, mpq_class(-1)}));
}

// Interpolate the polynomial of degree <= n through (i, v_i), i = 0..n.
QPoly interpolate(const std::vector<mpq_class>& v) {
  const int n = static_cast<int>(v.size());
  // Newton divided differences on the nodes 0..n-1.
  std::vector<mpq_class> dd = v;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(j);
  QPoly r(Qf());
  for (int i = n - 1; i >= 0; --i)
    r = r * QPoly(Qf(), {mpq_class(-i), mpq_class(1)}) + qconst(dd[i]);
  return r;
}

// Polynomial in x given by x -> Res_y(A(y), B(x - y)), degree <= deg A deg B.
QPoly resultant_in_x(const QPoly& A, const QPoly& B) {
  const int n = A.degree() * B.degree();
  std::vector<mpq_class> vals;
  for (int i = 0; i <= n; ++i) vals.push_back(resultant(A, reflect_shift(B, mpq_class(i))));
  return interpolate(vals);
}

// p(x) -> c^deg p(x / c) with c a nonzero rational; for monic p with roots
// r_i this is the monic polynomial with roots c r_i.
QPoly scale_roots(const QPoly& p, const mpq_class& c) {
  std::vector<mpq_class> v(p.coeffs().begin(), p.coeffs().end());
  mpq_class f = 1;
  for (int i = p.degree(); i >= 0; --i) {
    v[i] *= f;
    f *= c;
  }
  return QPoly(Qf(), v);
}

// Exact square root of a monic polynomial of even degree, or throws.
QPoly monic_sqrt(const QPoly& p) {
  const int n = p.degree();
  if (n % 2 != 0 || !p.is_monic()) throw std::logic_error("monic_sqrt: not a monic square");
  const int m = n / 2;
  std::vector<mpq_class> s(m + 1, 0);
  s[m] = 1;
  for (int k = m - 1; k >= 0; --k) {
    // coefficient of x^(m + k) in s^2 fixes s_k
    mpq_class acc = 0;
    for (int i = k + 1; i <= m; ++i) {
      const int j = m + k - i;
      if (j > k && j <= m) acc += s[i] * s[j];
    }
    s[k] = (p.coeff(m + k) - acc) / 2;
  }
  QPoly r(Qf(), s);
  if (r * r != p) throw std::logic_error("monic_sqrt: not a perfect square");
  return r;
}

void require_squarefree(const QPoly& G) {
  if (G.degree() < 1) throw std::invalid_argument("triple_sum_free: constant polynomial");
  if (!is_squarefree(G)) throw std::invalid_argument("triple_sum_free: input not squarefree");
}

std::vector<mpq_class> power_sums(const QPoly& Gm, int upto) {
  // Newton identities for monic G = x^n + c_{n-1} x^{n-1} + ... + c_0.
  const int n = Gm.degree();
  std::vector<mpq_class> e(n + 1, 0);  // elementary symmetric, e_0 = 1
  e[0] = 1;
  for (int k = 1; k <= n; ++k) e[k] = (k % 2 ? -1 : 1) * Gm.coeff(n - k);
  std::vector<mpq_class> ps(upto + 1, 0);
  ps[0] = n;
  for (int k = 1; k <= upto; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= std::min(k - 1, n); ++i)
      acc += (i % 2 ? 1 : -1) * e[i] * ps[k - i];
    if (k <= n) acc += (k % 2 ? 1 : -1) * mpq_class(k) * e[k];
    ps[k] = acc;
  }
  return ps;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

bool triple_sum_free_power_sums(const QPoly& G) {
  require_squarefree(G);
  const int n = G.degree();
  if (n < 3) return true;
  const int N = n * (n - 1) * (n - 2) / 6;
  const auto p = power_sums(G.monic(), N);
  std::vector<mpq_class> P(N + 1, 0);
  for (int m = 1; m <= N; ++m) {
    mpq_class all = 0;  // ordered triples, unrestricted
    for (int a = 0; a <= m; ++a)
      for (int b = 0; a + b <= m; ++b) {
        const int c = m - a - b;
        all += mpq_class(binom(m, a) * binom(m - a, b)) * p[a] * p[b] * p[c];
      }
    mpq_class pair = 0;  // sum over (i,k) of (2 t_i + t_k)^m
    for (int a = 0; a <= m; ++a) {
      mpz_class two = mpz_class(1) << a;
      pair += mpq_class(binom(m, a) * two) * p[a] * p[m - a];
    }
    mpz_class three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, m);
    const mpq_class diag = mpq_class(three) * p[m];
    P[m] = (all - 3 * pair + 2 * diag) / 6;
  }
  // Newton: elementary symmetric functions of the C(n,3) triple sums.
  std::vector<mpq_class> e(N + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= N; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * e[k - i] * P[i];
    e[k] = acc / k;
  }
  return sgn(e[N]) != 0;
}

bool triple_sum_free(const QPoly& G, TripleSumRoute* route) {
  require_squarefree(G);
  const int n = G.degree();
  if (n < 3) {
    if (route) *route = TripleSumRoute::kResultant;
    return true;
  }
  const QPoly Gm = G.monic();
  const QPoly D = scale_roots(Gm, 2);  // roots 2 t_i
  const QPoly P2 = resultant_in_x(Gm, Gm);
  auto [S2sq, rem] = divmod(P2, D);
  if (!rem.is_zero()) throw std::logic_error("pair-sum polynomial not divisible by D");
  const QPoly S2 = monic_sqrt(S2sq);
  // Q(x) = prod_{i,j} (x - 2 t_i - t_j) = Res_y(G(y), D(x - y)); C = Q / prod (x - 3 t_i).
  const QPoly Qx = resultant_in_x(Gm, D);
  auto [C, crem] = divmod(Qx, scale_roots(Gm, 3));
  if (!crem.is_zero()) throw std::logic_error("correction polynomial division failed");
  if (sgn(C.coeff(0)) == 0) {
    if (route) *route = TripleSumRoute::kPowerSums;
    return triple_sum_free_power_sums(G);
  }
  if (route) *route = TripleSumRoute::kResultant;
  // prod_k S2(-t_k) = Res_y(Gm(y), S2(-y)) = S3(0)^3 C(0).
  const mpq_class r0 = resultant(Gm, reflect_shift(S2, mpq_class(0)));
  return sgn(r0) != 0;
}

bool triple_sum_free(const QPoly& G) { return triple_sum_free(G, nullptr); }

bool triple_sum_free(const FqPoly& G, const FieldPtr& base) {
  if (G.degree() < 1) throw std::invalid_argument("triple_sum_free: constant polynomial");
  if (!is_squarefree(G)) throw std::invalid_argument("triple_sum_free: input not squarefree");
  // Roots in the explicit splitting field; every triple is tested.
  const auto split = splitting_roots(G, base);
  const auto& k = *split.field;
  const auto& r = split.roots;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      const auto target = k.neg(k.add(r[i], r[j]));
      for (std::size_t l = j + 1; l < r.size(); ++l)
        if (r[l] == target) return false;
    }
  return true;
}

bool eisenstein_check(const QPoly& f, unsigned long p) {
  if (!f.is_monic()) throw std::invalid_argument("eisenstein_check: polynomial must be monic");
  for (const auto& c : f.coeffs())
    if (c.get_den() != 1) throw std::invalid_argument("eisenstein_check: non-integer coefficient");
  if (f.degree() < 1) return false;
  const mpz_class P(p);
  for (int i = 0; i < f.degree(); ++i)
    if (mpz_class(f.coeff(i).get_num()) % P != 0) return false;
  return mpz_class(f.coeff(0).get_num()) % (P * P) != 0;
}

}  // namespace cubic
