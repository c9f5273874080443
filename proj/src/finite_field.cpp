#include "cubic/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace cubic {

namespace {

using Vec = std::vector<std::uint64_t>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec pmulmod(const Vec& a, const Vec& b, const Vec& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t n = f.size() - 1;  // f monic
  for (std::size_t i = r.size(); i-- > n;) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) r[i - n + j] = (r[i - n + j] + (p - c) * f[j]) % p;
  }
  trim(r);
  return r;
}

Vec ppowmod(Vec base, std::uint64_t e, const Vec& f, std::uint64_t p) {
  Vec r{1};
  while (e > 0) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t pinv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Vec pmod(Vec a, const Vec& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t li = pinv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * li % p;
    const std::size_t s = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = (a[s + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

Vec pgcd(Vec a, Vec b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool prime_field_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || f.back() != 1) return false;
  if (n == 1) return true;
  // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n.
  std::vector<Vec> frob(n + 1);
  frob[0] = Vec{0, 1};
  for (int i = 1; i <= n; ++i) frob[i] = ppowmod(frob[i - 1], p, f, p);
  Vec x{0, 1};
  if (frob[n] != x) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
    Vec h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (pgcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> least_irreducible(std::uint64_t p, int n) {
  if (n == 1) return {0, 1};
  Vec f(n + 1, 0);
  f[n] = 1;
  // Walk the lower coefficients as a base-p counter (canonical order).
  while (true) {
    if (f[0] != 0 && prime_field_irreducible(p, f)) return f;
    int i = 0;
    while (i < n) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    if (i == n) throw std::logic_error("no irreducible polynomial found");
  }
}

FiniteField::FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus, bool is_default)
    : p_(p), n_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)),
      default_modulus_(is_default) {
  if (!is_prime(p_)) throw std::invalid_argument("characteristic must be prime");
  if (n_ < 1) throw std::invalid_argument("modulus must have degree >= 1");
  if (!prime_field_irreducible(p_, modulus_))
    throw std::invalid_argument("modulus is not irreducible and monic");
  pow_p_.assign(n_ + 1, 1);
  for (int i = 1; i <= n_; ++i) {
    if (pow_p_[i - 1] > (std::uint64_t{1} << 62) / p_)
      throw std::invalid_argument("field order exceeds 2^62");
    pow_p_[i] = pow_p_[i - 1] * p_;
  }
  q_ = pow_p_[n_];
  if (p_ == 2) {
    for (int i = 0; i <= n_; ++i)
      if (modulus_[i]) mod_bits_ |= std::uint64_t{1} << i;
  }
  if (q_ <= kTableLimit) build_tables();
}

void FiniteField::build_tables() {
  const std::uint64_t m = q_ - 1;
  const auto primes = prime_factors(m);
  Elem g = 0;
  for (Elem c = 1; c < q_ && g == 0; ++c) {
    bool ok = true;
    for (std::uint64_t r : primes) {
      Elem t = 1, b = c;
      std::uint64_t e = m / r;
      while (e > 0) {
        if (e & 1) t = mul_slow(t, b);
        b = mul_slow(b, b);
        e >>= 1;
      }
      if (t == 1) {
        ok = false;
        break;
      }
    }
    if (ok) g = c;
  }
  if (q_ == 2) g = 1;
  primitive_ = g;
  exp_.resize(2 * m);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + m] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint64_t p, int n) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  auto f = std::make_shared<const FiniteField>(p, least_irreducible(p, n), true);
  cache.emplace(key, f);
  return f;
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(std::uint64_t p,
                                                             std::vector<std::uint64_t> modulus) {
  if (modulus.size() >= 2 && is_prime(p)) {
    auto d = get(p, static_cast<int>(modulus.size()) - 1);
    if (d->modulus() == modulus) return d;
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>,
                  std::shared_ptr<const FiniteField>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FiniteField>(p, std::move(modulus), false);
  cache.emplace(key, f);
  return f;
}

FiniteField::Elem FiniteField::add_digits(Elem a, Elem b, bool subtract) const {
  Elem r = 0;
  for (int i = 0; i < n_ && (a != 0 || b != 0); ++i) {
    const std::uint64_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    const std::uint64_t d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    r += d * pow_p_[i];
  }
  return r;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  return add_digits(a, b, false);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return a >= b ? a - b : a + p_ - b;
  return add_digits(a, b, true);
}

FiniteField::Elem FiniteField::neg(Elem a) const { return sub(0, a); }

FiniteField::Elem FiniteField::mul_slow(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (n_ == 1) return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  if (p_ == 2) {
    unsigned __int128 r = 0;
    for (int i = 0; i < n_; ++i)
      if ((b >> i) & 1) r ^= static_cast<unsigned __int128>(a) << i;
    for (int i = 2 * n_ - 2; i >= n_; --i)
      if ((r >> i) & 1) r ^= static_cast<unsigned __int128>(mod_bits_) << (i - n_);
    return static_cast<Elem>(r);
  }
  std::uint64_t da[64] = {}, db[64] = {}, pr[128] = {};
  for (int i = 0; i < n_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (int i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < n_; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p_;
  }
  for (int i = 2 * n_ - 2; i >= n_; --i) {
    const std::uint64_t c = pr[i];
    if (c == 0) continue;
    for (int j = 0; j <= n_; ++j) pr[i - n_ + j] = (pr[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  Elem r = 0;
  for (int i = n_ - 1; i >= 0; --i) r = r * p_ + pr[i];
  return r;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
  return mul_slow(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t m = q_ - 1;
    const auto l = static_cast<unsigned __int128>(log_[a]) * (e % m);
    return exp_[static_cast<std::size_t>(l % m)];
  }
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!exp_.empty()) {
    const std::uint64_t m = q_ - 1;
    return exp_[(m - log_[a]) % m];
  }
  return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::gen() const {
  if (n_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
  return p_;
}

FiniteField::Elem FiniteField::frobenius(Elem a, int k) const {
  for (int i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

std::uint64_t FiniteField::trace(Elem a) const {
  Elem t = 0, x = a;
  for (int i = 0; i < n_; ++i) {
    t = add(t, x);
    x = pow(x, p_);
  }
  return t;  // lies in F_p, whose encoding is the integer itself
}

std::vector<std::uint64_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint64_t> d(n_);
  for (int i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::from_digits(std::span<const std::uint64_t> d) const {
  if (d.size() > static_cast<std::size_t>(n_)) throw std::invalid_argument("too many digits");
  Elem r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + d[i] % p_;
  return r;
}

namespace {

std::string poly_text(const std::vector<std::uint64_t>& d, const char* var) {
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string FiniteField::to_string(Elem a) const {
  if (n_ == 1) return std::to_string(a);
  return poly_text(digits(a), "a");
}

std::string FiniteField::name() const { return "GF(" + std::to_string(q_) + ")"; }

std::string FiniteField::header() const {
  if (n_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(n_) +
         "; modulus=" + poly_text(modulus_, "x") + ")";
}

}  // namespace cubic
