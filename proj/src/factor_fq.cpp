#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "cubic/factor.hpp"

namespace cubic {

namespace {

using Elem = FiniteField::Elem;

FqPoly one(const FiniteField& k) { return FqPoly::constant(k, k.one()); }

// f(x) = g(x^p): return g with coefficients replaced by their p-th roots.
FqPoly pth_root(const FqPoly& f) {
  const FiniteField& k = f.field();
  const auto p = k.characteristic();
  std::vector<Elem> g;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    g.push_back(k.frobenius(f.coeff(i), k.degree() - 1));
  return FqPoly(k, std::move(g));
}

void squarefree_rec(const FqPoly& f, int mult, std::vector<std::pair<FqPoly, int>>& out) {
  const FiniteField& k = f.field();
  if (f.degree() < 1) return;
  const int p = static_cast<int>(k.characteristic());
  FqPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_rec(pth_root(f), mult * p, out);
    return;
  }
  FqPoly c = gcd(f, d);
  FqPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c), mult * p, out);
}

// Squarefree monic f: list of (product of all irreducible factors of degree i, i).
std::vector<std::pair<FqPoly, int>> distinct_degree(FqPoly f) {
  const FiniteField& k = f.field();
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly x = FqPoly::x(k);
  FqPoly h = x % f;
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, k.order(), f);
    FqPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const FqPoly& f, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  const FiniteField& k = f.field();
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const int n = f.degree();
  while (true) {
    std::vector<Elem> a(n);
    for (auto& c : a) c = rng() % k.order();
    FqPoly r(k, a);
    if (r.degree() < 1) continue;
    FqPoly b(k);
    if (k.characteristic() == 2) {
      // Trace from F_{2^{m d}} down to F_2.
      const int steps = k.degree() * d;
      FqPoly t = r % f, acc = r % f;
      for (int i = 1; i < steps; ++i) {
        t = mulmod(t, t, f);
        acc = acc + t;
      }
      b = acc;
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), k.order(), d);
      e = (e - 1) / 2;
      b = powmod(r, e, f) - one(k);
    }
    FqPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

FqPoly frobenius_power_of_x(const FqPoly& m, int k) {
  FqPoly h = FqPoly::x(m.field()) % m;
  for (int i = 0; i < k; ++i) h = powmod(h, m.field().order(), m);
  return h;
}

Factorization<FiniteField> factor(const FqPoly& f) {
  const FiniteField& k = f.field();
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization<FiniteField> res{&k, f.lead(), {}};
  std::vector<std::pair<FqPoly, int>> sqf;
  squarefree_rec(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::map<std::vector<Elem>, std::pair<FqPoly, int>> merged;
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<FqPoly> parts;
      equal_degree(h, d, rng, parts);
      for (auto& pp : parts) {
        auto key = pp.coeffs();
        auto it = merged.find(key);
        if (it == merged.end())
          merged.emplace(key, std::make_pair(pp, m));
        else
          it->second.second += m;
      }
    }
  }
  for (auto& [key, v] : merged) res.factors.push_back(v);
  std::sort(res.factors.begin(), res.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return res;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
  const int n = f.degree();
  FqPoly m = f.monic();
  FqPoly x = FqPoly::x(f.field());
  FqPoly h = x % m;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, f.field().order(), m);
    if (gcd(m, h - x).degree() > 0) return false;
  }
  // Ben-Or: no factor of degree <= n/2 also excludes repeated factors of
  // those degrees; a square of a degree > n/2 factor cannot fit.
  return true;
}

bool is_squarefree(const FqPoly& f) {
  for (const auto& [g, m] : factor(f).factors)
    if (m > 1) return false;
  return true;
}

std::vector<Elem> roots(const FqPoly& f) {
  const FiniteField& k = f.field();
  if (f.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  if (f.degree() < 1) return {};
  FqPoly m = f.monic();
  FqPoly x = FqPoly::x(k);
  FqPoly g = gcd(m, powmod(x, k.order(), m) - x);
  std::vector<Elem> out;
  if (g.degree() < 1) return out;
  std::vector<FqPoly> parts;
  std::mt19937_64 rng(0x5eed);
  equal_degree(g, 1, rng, parts);
  for (const auto& p : parts) out.push_back(k.neg(p.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cubic
