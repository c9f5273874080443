#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubic/factor.hpp"

namespace cubic {

namespace {

using Z = mpz_class;
using ZPoly = std::vector<Z>;  // low to high, reduced mod the current modulus

const RationalField& Qf() { return RationalField::instance(); }

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Z zmod(const Z& a, const Z& m) {
  Z r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zreduce(ZPoly a, const Z& m) {
  for (auto& c : a) c = zmod(c, m);
  ztrim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Z& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : Z(0)) + (i < b.size() ? b[i] : Z(0));
  return zreduce(std::move(r), m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Z& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (i < a.size() ? a[i] : Z(0)) - (i < b.size() ? b[i] : Z(0));
  return zreduce(std::move(r), m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Z& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zreduce(std::move(r), m);
}

ZPoly zscale(const ZPoly& a, const Z& s, const Z& m) {
  ZPoly r = a;
  for (auto& c : r) c *= s;
  return zreduce(std::move(r), m);
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod(ZPoly a, const ZPoly& b, const Z& m) {
  a = zreduce(std::move(a), m);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  ZPoly q(a.size() - db, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const Z c = zmod(a[i], m);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    for (int j = 0; j <= db; ++j) a[i - db + j] = zmod(a[i - db + j], m);
  }
  a.resize(db);
  return {zreduce(std::move(q), m), zreduce(std::move(a), m)};
}

Z zinv(const Z& a, const Z& m) {
  Z r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("non-invertible leading coefficient in Hensel lifting");
  return r;
}

FqPoly to_fp(const ZPoly& a, const FiniteField& k) {
  std::vector<FiniteField::Elem> c;
  const Z p(static_cast<unsigned long>(k.characteristic()));
  for (const auto& x : a) c.push_back(zmod(x, p).get_ui());
  return FqPoly(k, std::move(c));
}

ZPoly from_fp(const FqPoly& a) {
  ZPoly r;
  for (auto c : a.coeffs()) r.push_back(Z(static_cast<unsigned long>(c)));
  return r;
}

struct Lifted {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2.
Lifted hensel_step(const ZPoly& f, const Lifted& in, const Z& m) {
  const Z m2 = m * m;
  const ZPoly e = zsub(f, zmul(in.g, in.h, m2), m2);
  auto [q, r] = zdivmod(zmul(in.s, e, m2), in.h, m2);
  Lifted out;
  out.g = zadd(zadd(in.g, zmul(in.t, e, m2), m2), zmul(q, in.g, m2), m2);
  out.h = zadd(in.h, r, m2);
  const ZPoly b =
      zsub(zadd(zmul(in.s, out.g, m2), zmul(in.t, out.h, m2), m2), ZPoly{Z(1)}, m2);
  auto [c, d] = zdivmod(zmul(in.s, b, m2), out.h, m2);
  out.s = zsub(in.s, d, m2);
  out.t = zsub(zsub(in.t, zmul(in.t, b, m2), m2), zmul(c, out.g, m2), m2);
  return out;
}

// f = lc(f) * prod(facs) mod p, facs monic; returns monic lifts mod p^(2^steps).
std::vector<ZPoly> lift_all(const ZPoly& f, const std::vector<FqPoly>& facs, const Z& p,
                            int steps) {
  const FiniteField& k = facs.front().field();
  Z M = p;
  for (int i = 0; i < steps; ++i) M *= M;
  if (facs.size() == 1) return {zscale(f, zinv(f.back(), M), M)};
  const std::size_t half = facs.size() / 2;
  std::vector<FqPoly> A(facs.begin(), facs.begin() + half), B(facs.begin() + half, facs.end());
  FqPoly g0 = FqPoly::constant(k, zmod(f.back(), p).get_ui());
  for (const auto& a : A) g0 = g0 * a;
  FqPoly h0 = FqPoly::constant(k, k.one());
  for (const auto& b : B) h0 = h0 * b;
  auto [one, s0, t0] = xgcd(g0, h0);
  Lifted L{from_fp(g0), from_fp(h0), from_fp(s0), from_fp(t0)};
  Z m = p;
  for (int i = 0; i < steps; ++i) {
    L = hensel_step(f, L, m);
    m *= m;
  }
  auto left = lift_all(L.g, A, p, steps);
  auto right = lift_all(L.h, B, p, steps);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

ZPoly symmetric(ZPoly a, const Z& M) {
  const Z half = M / 2;
  for (auto& c : a) {
    c = zmod(c, M);
    if (c > half) c -= M;
  }
  ztrim(a);
  return a;
}

Z content(const ZPoly& a) {
  Z g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  Z c = content(a);
  if (a.back() < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

QPoly to_q(const ZPoly& a) {
  std::vector<mpq_class> c;
  for (const auto& x : a) c.emplace_back(x);
  return QPoly(Qf(), std::move(c));
}

// Primitive integer polynomial proportional to a.
ZPoly to_z(const QPoly& a) {
  Z den = 1;
  for (const auto& c : a.coeffs()) den = lcm(den, Z(c.get_den()));
  ZPoly r;
  for (const auto& c : a.coeffs()) r.push_back(Z(c * den));
  return primitive(r);
}

bool divides_exactly(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
  auto [q, r] = divmod(to_q(f), to_q(g));
  if (!r.is_zero()) return false;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) return false;
    out.push_back(Z(c));
  }
  quotient = out;
  return true;
}

// Irreducible factors (primitive, positive leading coefficient) of a
// squarefree primitive integer polynomial.
std::vector<ZPoly> factor_squarefree(ZPoly F) {
  const int n = static_cast<int>(F.size()) - 1;
  if (n <= 1) return {F};
  static const unsigned long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                          53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103};
  unsigned long best_p = 0;
  std::vector<FqPoly> best;
  int good = 0;
  for (unsigned long p : kPrimes) {
    if (F.back() % Z(p) == 0) continue;
    auto k = FiniteField::get(p, 1);
    FqPoly fp = to_fp(F, *k);
    if (fp.degree() != n || gcd(fp, fp.derivative()).degree() > 0) continue;
    auto fac = factor(fp);
    std::vector<FqPoly> parts;
    for (const auto& [g, m] : fac.factors) parts.push_back(g);
    if (best_p == 0 || parts.size() < best.size()) {
      best_p = p;
      best = parts;
    }
    if (++good == 5) break;
  }
  if (best_p == 0) throw std::runtime_error("no good prime for factorisation");
  if (best.size() == 1) return {F};

  // Coefficient bound for any factor (Mignotte, generously rounded up).
  Z maxc = 0;
  for (const auto& c : F) maxc = std::max(maxc, Z(abs(c)));
  Z bound = (Z(1) << n) * Z(n + 1) * maxc * abs(F.back());
  const Z p(best_p);
  int steps = 0;
  Z M = p;
  while (M <= 2 * bound) {
    M *= M;
    ++steps;
  }
  std::vector<ZPoly> lifted = lift_all(F, best, p, steps);

  std::vector<ZPoly> out;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    const std::size_t r = pool.size();
    for (unsigned mask = 0; mask < (1u << r) && !found; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
      ZPoly g{F.back()};
      for (std::size_t i = 0; i < r; ++i)
        if (mask & (1u << i)) g = zmul(g, pool[i], M);
      g = primitive(symmetric(g, M));
      ZPoly quo;
      if (!divides_exactly(g, F, quo)) continue;
      out.push_back(g);
      F = primitive(quo);
      std::vector<ZPoly> rest;
      for (std::size_t i = 0; i < r; ++i)
        if (!(mask & (1u << i))) rest.push_back(pool[i]);
      pool = rest;
      found = true;
    }
    if (!found) ++s;
  }
  if (F.size() > 1) out.push_back(F);
  return out;
}

}  // namespace

Factorization<RationalField> factor(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  if (f.degree() > 8) throw std::invalid_argument("factor over Q supports degree <= 8");
  Factorization<RationalField> res{&Qf(), f.lead(), {}};
  if (f.degree() == 0) return res;
  // Yun's squarefree decomposition.
  QPoly a = f.monic();
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    QPoly g = gcd(c, d);
    if (g.degree() > 0) {
      for (const auto& z : factor_squarefree(to_z(g)))
        res.factors.emplace_back(to_q(z).monic(), i);
    }
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return res;
}

bool is_irreducible(const QPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_squarefree(const QPoly& f) { return gcd(f, f.derivative()).degree() == 0; }

std::vector<mpq_class> roots(const QPoly& f) {
  std::vector<mpq_class> out;
  for (const auto& [g, m] : factor(f).factors)
    if (g.degree() == 1) out.push_back(-g.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubic
