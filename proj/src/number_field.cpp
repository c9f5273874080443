#include <stdexcept>

#include "cubic/factor.hpp"
#include "cubic/rational.hpp"

namespace cubic {

namespace {

QPoly as_poly(const std::vector<mpq_class>& v) { return QPoly(RationalField::instance(), v); }

NumberField::Elem pad(const QPoly& p, int d) {
  NumberField::Elem e(d, 0);
  for (int i = 0; i <= p.degree(); ++i) e[i] = p.coeff(i);
  return e;
}

}  // namespace

NumberField::NumberField(std::vector<mpq_class> modulus) : m_(std::move(modulus)) {
  while (!m_.empty() && sgn(m_.back()) == 0) m_.pop_back();
  const int d = degree();
  if (d < 1 || d > kMaxDegree)
    throw std::invalid_argument("number field degree must be between 1 and 6");
  if (m_.back() != 1) throw std::invalid_argument("number field modulus must be monic");
  if (!is_irreducible(as_poly(m_)))
    throw std::invalid_argument("number field modulus is reducible over Q");
}

NumberField::Elem NumberField::gen() const {
  Elem e = zero();
  if (degree() == 1)
    e[0] = -m_[0];
  else
    e[1] = 1;
  return e;
}

bool NumberField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  return true;
}

bool NumberField::less(const Elem& a, const Elem& b) const {
  for (int i = degree() - 1; i >= 0; --i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

NumberField::Elem NumberField::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
  const int d = degree();
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  for (int i = 2 * d - 2; i >= d; --i) {
    if (sgn(prod[i]) == 0) continue;
    const mpq_class c = prod[i];
    for (int j = 0; j <= d; ++j) prod[i - d + j] -= c * m_[j];
  }
  prod.resize(d);
  return prod;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  auto [g, s, t] = xgcd(as_poly(a), as_poly(m_));
  if (g.degree() != 0) throw std::logic_error("number field modulus not irreducible");
  return pad(s, degree());
}

bool NumberField::is_rational(const Elem& a) const {
  for (int i = 1; i < degree(); ++i)
    if (sgn(a[i]) != 0) return false;
  return true;
}

std::string NumberField::to_string(const Elem& a) const {
  std::string out;
  for (int i = degree() - 1; i >= 0; --i) {
    if (sgn(a[i]) == 0) continue;
    std::string c = a[i].get_str();
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      const std::string mono = i > 1 ? "w^" + std::to_string(i) : "w";
      if (c == "1")
        term = mono;
      else if (c == "-1")
        term = "-" + mono;
      else
        term = c + "*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string NumberField::name() const {
  return "Q[w]/(" + cubic::to_string(as_poly(m_), "w") + ")";
}

}  // namespace cubic
