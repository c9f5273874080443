#include "cubic/char2.hpp"

#include <set>
#include <stdexcept>

#include "cubic/embed.hpp"
#include "cubic/root_conditions.hpp"

namespace cubic {

namespace {

void require_char2(const FiniteField& k) {
  if (k.characteristic() != 2) throw std::invalid_argument("field must have characteristic 2");
}

FqPoly P(const FiniteField& k, std::vector<Elem2> c) { return FqPoly(k, std::move(c)); }

bool is_primitive(const FiniteField& k, Elem2 x) {
  if (x == 0) return false;
  const std::uint64_t m = k.order() - 1;
  for (std::uint64_t r : prime_factors(m))
    if (k.pow(x, m / r) == 1) return false;
  return true;
}

std::string show(const FiniteField& k, Elem2 x) { return k.to_string(x); }

// Roots of f (over k) inside K.
std::vector<Elem2> roots_in(const FieldPtr& k, const FqPoly& f, const FieldPtr& K) {
  if (K == k) return roots(f);
  return roots(embed(k, K).map(f));
}

std::uint64_t power_budget(std::uint64_t q, int deg, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (int i = 0; i < deg; ++i) {
    if (n > limit / q) throw std::length_error("enumeration budget exceeded");
    n *= q;
  }
  return n;
}

// Monic polynomial whose lower coefficients are the base-q digits of idx.
FqPoly monic_from_index(const FiniteField& k, int deg, std::uint64_t idx) {
  std::vector<Elem2> c(deg + 1);
  for (int i = 0; i < deg; ++i) {
    c[i] = idx % k.order();
    idx /= k.order();
  }
  c[deg] = k.one();
  return FqPoly(k, std::move(c));
}

std::uint64_t index_of_monic(const FqPoly& f) {
  std::uint64_t idx = 0;
  for (int i = f.degree() - 1; i >= 0; --i) idx = idx * f.field().order() + f.coeff(i);
  return idx;
}

std::vector<Elem2> complement_of_image(const FiniteField& k, Elem2 s, bool cubic) {
  std::set<Elem2> image;
  for (Elem2 x = 0; x < k.order(); ++x) {
    const Elem2 x2 = k.mul(x, x);
    image.insert(cubic ? k.add(k.mul(x2, x), k.mul(s, x2)) : k.add(x2, k.mul(s, x)));
  }
  std::vector<Elem2> out;
  for (Elem2 b = 0; b < k.order(); ++b)
    if (!image.count(b)) out.push_back(b);
  return out;
}

}  // namespace

FieldPtr gf2(int d) { return FiniteField::get(2, d); }

Elem2 primitive_generator(const FiniteField& k) {
  return is_primitive(k, k.gen()) ? k.gen() : k.primitive_element();
}

std::vector<Elem2> artin_schreier_complement(const FieldPtr& k) {
  require_char2(*k);
  if (k->degree() < 2) throw std::invalid_argument("artin_schreier_complement: need d >= 2");
  return complement_of_image(*k, k->one(), false);
}

std::vector<Elem2> quadratic_complement(const FieldPtr& k, Elem2 s) {
  require_char2(*k);
  if (s == 0) throw std::invalid_argument("quadratic_complement: s must be nonzero");
  return complement_of_image(*k, s, false);
}

Elem2 cubic_constant(const FieldPtr& k, Elem2 y) {
  require_char2(*k);
  for (Elem2 c : complement_of_image(*k, y, true))
    if (c != 0) return c;
  throw std::logic_error("cubic_constant: x^3 + y x^2 is onto");
}

Elem2 trace_one_element(const FieldPtr& k) {
  for (Elem2 g = 0; g < k->order(); ++g)
    if (k->trace(g) == 1) return g;
  throw std::logic_error("trace_one_element: trace is identically zero");
}

IrredCertificate build_quartic(const FieldPtr& k, QuarticVariant variant, Elem2 b, Elem2 gamma) {
  require_char2(*k);
  const auto& K = *k;
  const Elem2 a = primitive_generator(K);
  if (K.trace(gamma) != 1) throw std::invalid_argument("build_quartic: Tr(gamma) must be 1");
  IrredCertificate cert{FqPoly(K), "quartic-trace", {}};
  const Elem2 b2 = K.mul(b, b);
  if (variant == QuarticVariant::kUnit) {
    if (!is_irreducible(P(K, {b, 1, 1}))) throw std::invalid_argument("build_quartic: t^2+t+b must be irreducible");
    cert.poly = P(K, {K.mul(gamma, b2), b, K.add(b, 1), 0, 1});
    cert.transcript.push_back("unit variant, b = " + show(K, b));
  } else {
    if (!is_irreducible(P(K, {b, a, 1}))) throw std::invalid_argument("build_quartic: t^2+at+b must be irreducible");
    if (b == K.add(a, 1)) throw std::invalid_argument("build_quartic: b = a+1 is excluded");
    cert.poly = P(K, {K.mul(gamma, b2), K.mul(a, b), K.add(K.mul(a, a), b), 0, 1});
    cert.transcript.push_back("primitive variant, a = " + show(K, a) + ", b = " + show(K, b));
  }
  cert.transcript.push_back("gamma = " + show(K, gamma));
  cert.irreducible = is_irreducible(cert.poly);
  cert.triple_sum_free = cert.irreducible && triple_sum_free(cert.poly, k);
  if (!cert.irreducible || !cert.triple_sum_free)
    throw std::logic_error("build_quartic: construction failed verification for " + to_string(cert.poly));
  return cert;
}

IrredCertificate quintic_search(const FieldPtr& k) {
  require_char2(*k);
  const auto& K = *k;
  const std::uint64_t q = K.order();
  for (std::uint64_t i = 0; i < q * q * q * q; ++i) {
    const Elem2 e1 = i / (q * q * q), e2 = (i / (q * q)) % q, e3 = (i / q) % q, e4 = i % q;
    if (e2 == 1 && K.add(K.add(e1, e3), e4) == 1) continue;
    FqPoly f = P(K, {e4, e3, e2, e1, 1, 1});
    if (!is_irreducible(f)) continue;
    IrredCertificate cert{f, "quintic-count", {}};
    cert.transcript.push_back("e1..e4 = " + show(K, e1) + ", " + show(K, e2) + ", " + show(K, e3) + ", " +
                              show(K, e4) + (e2 != 1 ? " (e2 != 1)" : " (e2 = 1, e1+e3+e4 != 1)"));
    cert.irreducible = true;
    cert.triple_sum_free = triple_sum_free(f, k);
    if (!cert.triple_sum_free) throw std::logic_error("quintic_search: three roots sum to zero in " + to_string(f));
    return cert;
  }
  throw std::logic_error("quintic_search: search space exhausted");
}

IrredCertificate sextic_search(const FieldPtr& k) {
  require_char2(*k);
  const auto& K = *k;
  if (K.degree() < 2) throw std::invalid_argument("sextic_search: need d >= 2");
  // The sextic is t^3 g(t + 1/t) for g = t^3 + t^2 + (f1+1) t + f0, so the
  // trace test on f1 itself is only a heuristic; it is tried first, then
  // the test on f1 + 1.
  long rejected = 0;
  for (int shifted = 0; shifted < 2; ++shifted)
    for (Elem2 f0 = 1; f0 < K.order(); ++f0)
      for (Elem2 f1 = 0; f1 < K.order(); ++f1) {
        const Elem2 g1 = shifted ? K.add(f1, 1) : f1;
        if (K.trace(K.div(g1, f0)) != 1) continue;
        if (!is_irreducible(P(K, {f0, g1, 1, 1}))) continue;
        FqPoly f = P(K, {1, 1, f1, f0, f1, 1, 1});
        if (!is_irreducible(f)) {
          ++rejected;
          continue;
        }
        IrredCertificate cert{f, "sextic-palindrome", {}};
        if (rejected)
          cert.transcript.push_back(std::to_string(rejected) + " candidate(s) passing the trace test were reducible");
        cert.transcript.push_back("f0 = " + show(K, f0) + ", f1 = " + show(K, f1) + ", Tr(" +
                                  (shifted ? "(f1+1)" : "f1") + "/f0) = 1, t^3+t^2+" +
                                  (shifted ? "(f1+1)" : "f1") + " t+f0 irreducible");
        cert.irreducible = true;
        cert.triple_sum_free = triple_sum_free(f, k);
        if (!cert.triple_sum_free) throw std::logic_error("sextic_search: three roots sum to zero in " + to_string(f));
        return cert;
      }
  throw std::logic_error("sextic_search: search space exhausted");
}

long long count_irreducibles(const FieldPtr& k, int deg) {
  const std::uint64_t n = power_budget(k->order(), deg, std::uint64_t{1} << 20);
  long long count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += is_irreducible(monic_from_index(*k, deg, i));
  return count;
}

long long count_with_subleading(const FieldPtr& k, int deg, Elem2 a) {
  if (deg < 1) throw std::invalid_argument("count_with_subleading: degree must be positive");
  const std::uint64_t n = power_budget(k->order(), deg - 1, std::uint64_t{1} << 20);
  long long count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += is_irreducible(monic_from_index(*k, deg, i + n * a));
  return count;
}

bool check_shift_lemma(const FieldPtr& k, int deg) {
  const std::uint64_t n = power_budget(k->order(), deg, std::uint64_t{1} << 12);
  std::vector<bool> irr(n);
  for (std::uint64_t i = 0; i < n; ++i) irr[i] = is_irreducible(monic_from_index(*k, deg, i));
  for (Elem2 a = 0; a < k->order(); ++a) {
    const FqPoly shift = P(*k, {k->neg(a), 1});
    std::vector<bool> hit(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t j = index_of_monic(monic_from_index(*k, deg, i).compose(shift));
      if (hit[j] || irr[i] != irr[j]) return false;
      hit[j] = true;
    }
  }
  return true;
}

SexticBuild char2_sextic(const FieldPtr& k, int item) {
  require_char2(*k);
  const auto& K = *k;
  const int d = K.degree();
  const Elem2 a = primitive_generator(K);
  const Elem2 a2 = K.mul(a, a);
  auto lin = [&](Elem2 r) { return P(K, {r, 1}); };
  SexticBuild out{FqPoly(K), {}, {}};
  out.transcript.push_back("a = " + show(K, a));

  if (item == 1) {
    std::vector<Elem2> pts;
    if (d >= 5) {
      pts = {0, 1};
      for (int i = 1; i <= 4; ++i) pts.push_back(K.pow(a, i));
      out.transcript.push_back("roots 0, 1, a, a^2, a^3, a^4");
    } else if (d == 4) {
      const FqPoly m = P(K, {1, 1, 0, 0, 1});
      const Elem2 al = K.modulus() == std::vector<std::uint64_t>{1, 1, 0, 0, 1} ? K.gen() : roots(m).front();
      const Elem2 al2 = K.mul(al, al);
      pts = {0, 1, al, al2, K.add(K.add(al2, al), 1), K.mul(al2, al)};
      out.transcript.push_back("alpha = " + show(K, al) + " root of x^4+x+1; roots 0, 1, alpha, alpha^2, "
                               "alpha^2+alpha+1, alpha^3");
    } else {
      throw std::domain_error("pattern 1 recipe needs d >= 4");
    }
    for (Elem2 r : pts) out.factors.push_back(lin(r));
  } else {
    if (item < 2 || item > 11) throw std::invalid_argument("char2_sextic: item must be 1..11");
    if (d < 3) throw std::domain_error("char-2 recipes need d >= 3");
    const auto bs = artin_schreier_complement(k);
    const Elem2 b1 = bs[0], b2 = bs[1], b3 = bs[2], b4 = bs[3];
    auto quad = [&](Elem2 b) { return P(K, {b, 1, 1}); };
    auto c1 = [&] { return cubic_constant(k, 1); };
    auto c2 = [&] { return cubic_constant(k, a); };
    out.transcript.push_back("b1..b4 = " + show(K, b1) + ", " + show(K, b2) + ", " + show(K, b3) + ", " + show(K, b4));
    switch (item) {
      case 2:
        out.factors = {lin(0), lin(a), lin(a2), lin(K.add(a2, 1)), quad(b1)};
        break;
      case 3:
        out.factors = {lin(0), lin(a), lin(a2), P(K, {c1(), 0, 1, 1})};
        break;
      case 4: {
        // a root of t^2+t+b1 plus a root of t^2+t+b2 equals a iff b2 = b1 + a^2 + a
        const FieldPtr K2 = FiniteField::get(2, 2 * d);
        const auto r1 = roots_in(k, quad(b1), K2), r2 = roots_in(k, quad(b2), K2);
        const Elem2 aK = embed(k, K2)(a);
        bool hits = false;
        for (Elem2 x : r1)
          for (Elem2 y : r2) hits = hits || K2->add(x, y) == aK;
        Elem2 bb = b2;
        if (hits) {
          bb = b3;
          out.transcript.push_back("r1 + r2 = a: replaced b2 by b3");
        }
        out.factors = {lin(0), lin(a), quad(b1), quad(bb)};
        break;
      }
      case 5: {
        const auto cands = quadratic_complement(k, a);
        std::vector<Elem2> b58(cands.begin(), cands.begin() + std::min<std::size_t>(4, cands.size()));
        Elem2 bj = 0;
        bool found = false;
        for (Elem2 b : b58)
          if (!found && b != K.add(a, 1)) {
            bj = b;
            found = true;
          }
        if (!found) throw std::logic_error("no b_j != a+1 among b5..b8");
        out.transcript.push_back("b_j = " + show(K, bj) + " (b_j != a+1)");
        const auto cert = build_quartic(k, QuarticVariant::kPrimitive, bj, trace_one_element(k));
        out.factors = {lin(0), lin(1), cert.poly};
        break;
      }
      case 6:
        out.factors = {lin(a), P(K, {c1(), 0, 1, 1}), quad(b1)};
        break;
      case 7: {
        Elem2 first = b1;
        if (b1 == K.add(b2, b3)) {
          first = b4;
          out.transcript.push_back("b1 = b2 + b3: replaced b1 by b4");
        }
        out.factors = {quad(first), quad(b2), quad(b3)};
        break;
      }
      case 8:
        out.factors = {lin(0), quintic_search(k).poly};
        break;
      case 9: {
        const auto quart = build_quartic(k, QuarticVariant::kUnit, b1, trace_one_element(k)).poly;
        const FieldPtr K4 = FiniteField::get(2, 4 * d);
        const auto s = roots_in(k, quart, K4);
        std::set<Elem2> sums;
        for (std::size_t i = 0; i < s.size(); ++i)
          for (std::size_t j = i + 1; j < s.size(); ++j) sums.insert(K4->add(s[i], s[j]));
        int chosen = 0;
        for (int m = 1; m <= 4 && !chosen; ++m) {
          bool clash = false;
          for (Elem2 r : roots_in(k, quad(bs[m - 1]), K4)) clash = clash || sums.count(r);
          if (!clash) chosen = m;
        }
        if (!chosen) throw std::logic_error("no admissible m in 1..4");
        out.transcript.push_back("m = " + std::to_string(chosen));
        out.factors = {quart, quad(bs[chosen - 1])};
        break;
      }
      case 10:
        out.factors = {P(K, {c1(), 0, 1, 1}), P(K, {c2(), 0, a, 1})};
        break;
      case 11:
        out.factors = {sextic_search(k).poly};
        break;
    }
  }
  out.G = FqPoly::constant(K, 1);
  for (const auto& f : out.factors) out.G = out.G * f;
  return out;
}

}  // namespace cubic
