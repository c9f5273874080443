#include "cubic/cubic_form.hpp"

namespace cubic {

const std::array<Exps, 20>& cubic_monomials() {
  static const std::array<Exps, 20> mons = [] {
    std::array<Exps, 20> m{};
    int n = 0;
    for (int i = 3; i >= 0; --i)
      for (int j = 3 - i; j >= 0; --j)
        for (int k = 3 - i - j; k >= 0; --k) m[n++] = {i, j, k, 3 - i - j - k};
    return m;
  }();
  return mons;
}

int cubic_index(const Exps& e) {
  static const std::array<int, 256> table = [] {
    std::array<int, 256> t{};
    t.fill(-1);
    const auto& m = cubic_monomials();
    for (int i = 0; i < 20; ++i) t[m[i][0] * 64 + m[i][1] * 16 + m[i][2] * 4 + m[i][3]] = i;
    return t;
  }();
  const int key = e[0] * 64 + e[1] * 16 + e[2] * 4 + e[3];
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0 || e[0] + e[1] + e[2] + e[3] != 3 || table[key] < 0)
    throw std::invalid_argument("not a cubic monomial");
  return table[key];
}

std::string monomial_text(const Exps& e) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace cubic
