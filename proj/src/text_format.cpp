#include "cubic/text_format.hpp"

#include <algorithm>

namespace cubic {

namespace {

std::string strip(std::string_view s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  return r;
}

std::uint64_t parse_u64(const std::string& s, std::size_t at) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected integer", at);
  return std::stoull(s);
}

}  // namespace

FieldSpec parse_field(std::string_view text) {
  const std::string s = strip(text);
  FieldSpec spec;
  if (s == "Q" || s == "QQ") {
    spec.rational = true;
    return spec;
  }
  if (s.size() < 5 || (s.rfind("GF(", 0) != 0 && s.rfind("F(", 0) != 0) || s.back() != ')')
    throw ParseError("expected Q or GF(...)", 0);
  const std::size_t open = s.find('(') + 1;
  const std::string body = s.substr(open, s.size() - open - 1);
  const std::size_t sep = body.find_first_of(";,");
  const std::string size = body.substr(0, sep);
  std::uint64_t p = 0;
  int n = 1;
  const std::size_t caret = size.find('^');
  if (caret != std::string::npos) {
    p = parse_u64(size.substr(0, caret), open);
    n = static_cast<int>(parse_u64(size.substr(caret + 1), open + caret + 1));
  } else {
    const std::uint64_t q = parse_u64(size, open);
    for (std::uint64_t d : prime_factors(q)) p = d;
    if (p == 0 || prime_factors(q).size() != 1) throw ParseError("field order must be a prime power", open);
    for (std::uint64_t r = q; r > p; r /= p) ++n;
  }
  if (!is_prime(p)) throw ParseError("characteristic must be prime", open);
  if (n < 1) throw ParseError("degree must be positive", open);
  if (sep == std::string::npos) {
    spec.finite = FiniteField::get(p, n);
    return spec;
  }
  std::string mod = body.substr(sep + 1);
  if (mod.rfind("modulus=", 0) == 0) mod = mod.substr(8);
  auto prime = FiniteField::get(p, 1);
  auto m = parse_poly(*prime, mod, "x");
  if (m.degree() != n || !m.is_monic())
    throw ParseError("modulus must be monic of degree " + std::to_string(n), open + sep + 1);
  std::vector<std::uint64_t> c(m.coeffs().begin(), m.coeffs().end());
  if (n == 1) {
    spec.finite = FiniteField::get(p, 1);
    return spec;
  }
  spec.finite = FiniteField::with_modulus(p, c);
  return spec;
}

}  // namespace cubic
