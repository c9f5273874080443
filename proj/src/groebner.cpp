#include "cubic/groebner.hpp"

#include <algorithm>

namespace cubic {

const MonomialTable& MonomialTable::instance() {
  static const MonomialTable t;
  return t;
}

MonomialTable::MonomialTable() : index_(13 * 13 * 13 * 13, -1) {
  for (int d = 0; d <= kMaxDegree; ++d) {
    auto& v = by_degree_[d];
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b)
        for (int c = d - a - b; c >= 0; --c) v.push_back({a, b, c, d - a - b - c});
    // degrevlex: smaller power of the last variable is larger, then the next
    std::sort(v.begin(), v.end(), [](const Exps& x, const Exps& y) {
      for (int i = 3; i >= 1; --i)
        if (x[i] != y[i]) return x[i] < y[i];
      return false;
    });
    for (std::size_t i = 0; i < v.size(); ++i) index_[key(v[i])] = static_cast<int>(i);
  }
}

}  // namespace cubic
