#ifndef CUBIC_RATIONAL_HPP
#define CUBIC_RATIONAL_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic {

// The rational numbers, elements held by GMP in lowest terms.
class RationalField {
 public:
  using Elem = mpq_class;

  static const RationalField& instance() {
    static const RationalField q;
    return q;
  }

  std::uint64_t characteristic() const { return 0; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool less(const Elem& a, const Elem& b) const { return a < b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

// Q[w]/(m(w)) for an irreducible monic m of degree at most 6. Elements are
// coefficient vectors of length deg m in the power basis of w.
class NumberField {
 public:
  using Elem = std::vector<mpq_class>;
  static constexpr int kMaxDegree = 6;

  explicit NumberField(std::vector<mpq_class> modulus);

  int degree() const { return static_cast<int>(m_.size()) - 1; }
  const std::vector<mpq_class>& modulus() const { return m_; }
  std::uint64_t characteristic() const { return 0; }

  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const {
    Elem e(degree(), 0);
    e[0] = 1;
    return e;
  }
  Elem gen() const;
  Elem from_rational(const mpq_class& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
  }
  Elem from_int(std::int64_t v) const { return from_rational(mpq_class(static_cast<long>(v))); }
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool less(const Elem& a, const Elem& b) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  // True iff a lies in Q (all higher basis coefficients vanish).
  bool is_rational(const Elem& a) const;
  std::string to_string(const Elem& a) const;
  std::string name() const;

 private:
  std::vector<mpq_class> m_;  // monic, low to high
};

}  // namespace cubic

#endif  // CUBIC_RATIONAL_HPP
