#ifndef CUBIC_FINITE_FIELD_HPP
#define CUBIC_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cubic {

// F_{p^n} in the polynomial basis over F_p. An element is the integer
// sum d_i p^i of its basis digits, so 0..q-1 enumerates the field in its
// canonical order. Fields up to 2^20 elements use log/exp tables; larger
// ones (splitting fields in the line solver) fall back to polynomial
// arithmetic on the digits.
class FiniteField {
 public:
  using Elem = std::uint64_t;

  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  // Default modulus: least irreducible monic in canonical order. Cached.
  static std::shared_ptr<const FiniteField> get(std::uint64_t p, int n);
  // Explicit modulus, coefficients low to high, monic, length n+1.
  static std::shared_ptr<const FiniteField> with_modulus(
      std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  bool is_default_modulus() const { return default_modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_int(std::int64_t v) const;

  // Class of x modulo the modulus (the element printed as "a").
  Elem gen() const;
  Elem primitive_element() const { return primitive_; }
  // a^(p^k)
  Elem frobenius(Elem a, int k = 1) const;
  // Absolute trace to F_p, returned as an integer in [0, p).
  std::uint64_t trace(Elem a) const;

  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint64_t> d) const;

  std::string to_string(Elem a) const;
  // "GF(4)"
  std::string name() const;
  // "GF(2^2; modulus=x^2+x+1)"
  std::string header() const;

  FiniteField(std::uint64_t p, std::vector<std::uint64_t> modulus,
              bool is_default);

 private:
  Elem mul_slow(Elem a, Elem b) const;
  Elem add_digits(Elem a, Elem b, bool subtract) const;
  void build_tables();

  std::uint64_t p_;
  int n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  bool default_modulus_;
  std::vector<std::uint64_t> pow_p_;  // p^i for i <= n
  std::uint64_t mod_bits_ = 0;        // p == 2: modulus as a bit mask
  std::vector<std::uint32_t> exp_;    // 2(q-1) entries
  std::vector<std::uint32_t> log_;    // q entries
  Elem primitive_ = 0;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Irreducibility over F_p of a monic polynomial (coefficients low to high).
bool prime_field_irreducible(std::uint64_t p,
                             const std::vector<std::uint64_t>& f);
std::vector<std::uint64_t> least_irreducible(std::uint64_t p, int n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace cubic

#endif  // CUBIC_FINITE_FIELD_HPP
