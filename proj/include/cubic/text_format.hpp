#ifndef CUBIC_TEXT_FORMAT_HPP
#define CUBIC_TEXT_FORMAT_HPP

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubic/finite_field.hpp"
#include "cubic/poly.hpp"
#include "cubic/rational.hpp"

namespace cubic {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Symbol naming the field generator in text ("a" for F_{p^d}, "w" for a
// number field); none for prime fields and Q.
inline std::optional<std::pair<std::string, FiniteField::Elem>> generator_symbol(
    const FiniteField& k) {
  if (k.degree() == 1) return std::nullopt;
  return std::make_pair(std::string("a"), k.gen());
}
inline std::optional<std::pair<std::string, mpq_class>> generator_symbol(const RationalField&) {
  return std::nullopt;
}
inline std::optional<std::pair<std::string, NumberField::Elem>> generator_symbol(
    const NumberField& k) {
  return std::make_pair(std::string("w"), k.gen());
}

inline FiniteField::Elem integer_literal(const FiniteField& k, const std::string& s) {
  mpz_class v(s);
  v %= static_cast<unsigned long>(k.characteristic());
  return k.from_int(v.get_si());
}
inline mpq_class integer_literal(const RationalField&, const std::string& s) {
  return mpq_class(mpz_class(s));
}
inline NumberField::Elem integer_literal(const NumberField& k, const std::string& s) {
  return k.from_rational(mpq_class(mpz_class(s)));
}

// Sparse multivariate polynomial: exponent vector -> coefficient.
template <class F>
using SparsePoly = std::map<std::vector<int>, typename F::Elem>;

namespace detail {

template <class F>
class ExprParser {
 public:
  using Elem = typename F::Elem;
  ExprParser(const F& k, std::string_view s, const std::vector<std::string>& vars)
      : k_(k), s_(s), vars_(vars) {}

  SparsePoly<F> parse() {
    auto r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  SparsePoly<F> constant(const Elem& c) {
    SparsePoly<F> r;
    if (!k_.is_zero(c)) r.emplace(std::vector<int>(vars_.size(), 0), c);
    return r;
  }
  SparsePoly<F> add(const SparsePoly<F>& a, const SparsePoly<F>& b, bool subtract) {
    SparsePoly<F> r = a;
    for (const auto& [m, c] : b) {
      auto it = r.find(m);
      Elem v = subtract ? k_.neg(c) : c;
      if (it == r.end()) {
        r.emplace(m, v);
      } else {
        it->second = k_.add(it->second, v);
        if (k_.is_zero(it->second)) r.erase(it);
      }
    }
    return r;
  }
  SparsePoly<F> mul(const SparsePoly<F>& a, const SparsePoly<F>& b) {
    SparsePoly<F> r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        std::vector<int> m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        SparsePoly<F> t;
        t.emplace(m, k_.mul(ca, cb));
        r = add(r, t, false);
      }
    return r;
  }
  SparsePoly<F> expr() {
    skip();
    SparsePoly<F> r;
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    r = term();
    if (neg) r = add(SparsePoly<F>{}, r, true);
    while (true) {
      if (accept('+'))
        r = add(r, term(), false);
      else if (accept('-'))
        r = add(r, term(), true);
      else
        break;
    }
    return r;
  }
  SparsePoly<F> term() {
    SparsePoly<F> r = power();
    while (true) {
      if (accept('*')) {
        r = mul(r, power());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        SparsePoly<F> d = power();
        if (d.size() != 1 || !is_constant(d.begin()->first))
          throw ParseError("division only by nonzero constants", at);
        r = mul(r, constant(k_.inv(d.begin()->second)));
      } else {
        break;
      }
    }
    return r;
  }
  bool is_constant(const std::vector<int>& m) const {
    for (int e : m)
      if (e != 0) return false;
    return true;
  }
  SparsePoly<F> power() {
    SparsePoly<F> b = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      SparsePoly<F> r = constant(k_.one());
      for (int i = 0; i < e; ++i) r = mul(r, b);
      return r;
    }
    return b;
  }
  SparsePoly<F> atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == '-') {
      ++pos_;
      return add(SparsePoly<F>{}, power(), true);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(integer_literal(k_, std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          std::vector<int> m(vars_.size(), 0);
          m[i] = 1;
          SparsePoly<F> r;
          r.emplace(m, k_.one());
          return r;
        }
      }
      auto g = generator_symbol(k_);
      if (g && g->first == name) return constant(g->second);
      throw ParseError("unknown symbol '" + name + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  const F& k_;
  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
SparsePoly<F> parse_expression(const F& k, std::string_view text,
                               const std::vector<std::string>& vars) {
  return detail::ExprParser<F>(k, text, vars).parse();
}

// Univariate polynomial in `var`.
template <class F>
Poly<F> parse_poly(const F& k, std::string_view text, const std::string& var = "t") {
  const std::vector<std::string> vars{var};
  auto sp = parse_expression(k, text, vars);
  int deg = 0;
  for (const auto& [m, c] : sp) deg = std::max(deg, m[0]);
  std::vector<typename F::Elem> c(deg + 1, k.zero());
  for (const auto& [m, v] : sp) c[m[0]] = v;
  return Poly<F>(k, std::move(c));
}

// Field element written in the generator symbol ("a^2+a", "3/2").
template <class F>
typename F::Elem parse_element(const F& k, std::string_view text) {
  auto sp = parse_expression(k, text, {});
  if (sp.empty()) return k.zero();
  return sp.begin()->second;
}

// A coefficient field given on the command line or in a report header.
struct FieldSpec {
  bool rational = false;
  FieldPtr finite;  // set iff !rational
  std::string text() const { return rational ? "Q" : finite->header(); }
};

// "Q", "GF(7)", "GF(2^4)", "GF(16; modulus=x^4+x+1)", "GF(2^4,x^4+x+1)".
FieldSpec parse_field(std::string_view text);

}  // namespace cubic

#endif  // CUBIC_TEXT_FORMAT_HPP
