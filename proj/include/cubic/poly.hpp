#ifndef CUBIC_POLY_HPP
#define CUBIC_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubic {

// Dense univariate polynomial over a field F, coefficients low to high with
// trailing zeros trimmed. The field object must outlive the polynomial.
template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(const F& k) : k_(&k) {}
  Poly(const F& k, std::vector<Elem> c) : k_(&k), c_(std::move(c)) { trim(); }

  static Poly constant(const F& k, const Elem& c) { return Poly(k, {c}); }
  static Poly monomial(const F& k, const Elem& c, int deg) {
    std::vector<Elem> v(deg + 1, k.zero());
    v[deg] = c;
    return Poly(k, std::move(v));
  }
  static Poly x(const F& k) { return monomial(k, k.one(), 1); }
  // Monic product of (x - r) over the given roots.
  static Poly from_roots(const F& k, const std::vector<Elem>& roots) {
    Poly p = constant(k, k.one());
    for (const auto& r : roots) p = p * Poly(k, {k.neg(r), k.one()});
    return p;
  }

  const F& field() const { return *k_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : k_->zero();
  }
  Elem lead() const { return c_.empty() ? k_->zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && k_->eq(c_.back(), k_->one()); }

  Poly monic() const {
    if (c_.empty()) return *this;
    const Elem li = k_->inv(c_.back());
    return scale(li);
  }
  Poly scale(const Elem& s) const {
    std::vector<Elem> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(k_->mul(a, s));
    return Poly(*k_, std::move(v));
  }
  Elem eval(const Elem& x) const {
    Elem r = k_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = k_->add(k_->mul(r, x), c_[i]);
    return r;
  }
  Poly derivative() const {
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
      v.push_back(k_->mul(k_->from_int(static_cast<std::int64_t>(i)), c_[i]));
    return Poly(*k_, std::move(v));
  }
  // f(g(x))
  Poly compose(const Poly& g) const {
    Poly r(*k_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(*k_, c_[i]);
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const auto& k = *a.k_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.add(a.coeff(i), b.coeff(i));
    return Poly(k, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const auto& k = *a.k_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), k.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.sub(a.coeff(i), b.coeff(i));
    return Poly(k, std::move(v));
  }
  Poly operator-() const {
    std::vector<Elem> v;
    for (const auto& a : c_) v.push_back(k_->neg(a));
    return Poly(*k_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const auto& k = *a.k_;
    if (a.is_zero() || b.is_zero()) return Poly(k);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (k.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = k.add(v[i + j], k.mul(a.c_[i], b.c_[j]));
    }
    return Poly(k, std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.k_->eq(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Canonical order: degree, then coefficients from the top down.
  friend bool canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.k_->less(a.c_[i], b.c_[i])) return true;
      if (a.k_->less(b.c_[i], a.c_[i])) return false;
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && k_->is_zero(c_.back())) c_.pop_back();
  }

  const F* k_;
  std::vector<Elem> c_;
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  const F& k = a.field();
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<typename F::Elem> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<F>(k), a};
  std::vector<typename F::Elem> q(a.degree() - db + 1, k.zero());
  const auto li = k.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    if (k.is_zero(r[i])) continue;
    const auto c = k.mul(r[i], li);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(c, b.coeff(j)));
  }
  r.resize(db);
  return {Poly<F>(k, std::move(q)), Poly<F>(k, std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& k = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(k, k.one()), s1(k);
  Poly<F> t0(k), t1 = Poly<F>::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto li = k.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

template <class F>
Poly<F> mulmod(const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return (a * b) % m;
}

template <class F>
Poly<F> powmod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  const F& k = base.field();
  Poly<F> r = Poly<F>::constant(k, k.one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

template <class F>
Poly<F> powmod(Poly<F> base, const mpz_class& e, const Poly<F>& m) {
  const F& k = base.field();
  Poly<F> r = Poly<F>::constant(k, k.one()) % m;
  base = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
  }
  return r;
}

template <class F>
Poly<F> pow(const Poly<F>& a, int e) {
  Poly<F> r = Poly<F>::constant(a.field(), a.field().one());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// Resultant via the Euclidean algorithm over a field.
template <class F>
typename F::Elem resultant(Poly<F> a, Poly<F> b) {
  const F& k = a.field();
  if (a.is_zero() || b.is_zero()) return k.zero();
  typename F::Elem res = k.one();
  while (b.degree() > 0) {
    const int da = a.degree(), db = b.degree();
    Poly<F> r = a % b;
    if (r.is_zero()) return k.zero();
    // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
    if ((da * db) % 2 == 1) res = k.neg(res);
    const int dr = r.degree();
    for (int i = 0; i < da - dr; ++i) res = k.mul(res, b.lead());
    a = std::move(b);
    b = std::move(r);
  }
  // b is a nonzero constant
  for (int i = 0; i < a.degree(); ++i) res = k.mul(res, b.lead());
  return res;
}

// Polynomial of degree < n through (xs[i], ys[i]), nodes distinct.
template <class F>
Poly<F> interpolate(const F& k, const std::vector<typename F::Elem>& xs, const std::vector<typename F::Elem>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<typename F::Elem> dd = ys;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) dd[i] = k.div(k.sub(dd[i], dd[i - 1]), k.sub(xs[i], xs[i - j]));
  Poly<F> r(k);
  for (int i = n - 1; i >= 0; --i)
    r = r * Poly<F>(k, {k.neg(xs[i]), k.one()}) + Poly<F>::constant(k, dd[i]);
  return r;
}

// Appends c*mono to a sum being printed; an empty mono is a constant term.
// Coefficients that print as sums are parenthesised.
template <class F>
void append_term(std::string& out, const F& k, const typename F::Elem& c, const std::string& mono) {
  if (k.is_zero(c)) return;
  const std::string cs = k.to_string(c);
  const bool neg = !cs.empty() && cs[0] == '-';
  const std::string body = neg ? cs.substr(1) : cs;
  const bool compound = body.find_first_of("+-") != std::string::npos;
  std::string term;
  if (mono.empty())
    term = cs;
  else if (body == "1" && !compound)
    term = (neg ? "-" : "") + mono;
  else if (compound)
    term = "(" + cs + ")*" + mono;
  else
    term = cs + "*" + mono;
  if (!out.empty() && term[0] != '-') out += "+";
  out += term;
}

// Plain text, variable chosen by the caller.
template <class F>
std::string to_string(const Poly<F>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i)
    append_term(out, p.field(), p.coeffs()[i], i == 0 ? "" : var + (i > 1 ? "^" + std::to_string(i) : ""));
  return out;
}

}  // namespace cubic

#endif  // CUBIC_POLY_HPP
