#include "cubic/proj_geom.hpp"

namespace cubic {

std::vector<Vec<FiniteField>> projective_points(const FiniteField& k, int n) {
  const std::uint64_t q = k.order();
  std::vector<Vec<FiniteField>> out;
  for (int lead = n; lead >= 0; --lead) {
    // coordinates before `lead` are zero, after it free
    const int free = n - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec<FiniteField> v(n + 1, 0);
      v[lead] = 1;
      std::uint64_t r = idx;
      for (int j = n; j > lead; --j) {
        v[j] = r % q;
        r /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Vec<FiniteField>> rational_points(const FiniteField& k, const LineP3<FiniteField>& l) {
  std::vector<Vec<FiniteField>> out;
  out.push_back(l.row(1));
  for (std::uint64_t t = 0; t < k.order(); ++t) {
    Vec<FiniteField> v(4);
    for (int j = 0; j < 4; ++j) v[j] = k.add(l.rows[0][j], k.mul(t, l.rows[1][j]));
    out.push_back(std::move(v));
  }
  return out;
}

void for_each_line_p3(const FiniteField& k, const std::function<void(const LineP3<FiniteField>&)>& fn) {
  const std::uint64_t q = k.order();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<std::pair<int, int>> slots;  // (row, col) of free entries
      for (int c = i + 1; c < 4; ++c)
        if (c != j) slots.push_back({0, c});
      for (int c = j + 1; c < 4; ++c) slots.push_back({1, c});
      std::uint64_t total = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) total *= q;
      LineP3<FiniteField> l;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (auto& r : l.rows) r.fill(0);
        l.rows[0][i] = 1;
        l.rows[1][j] = 1;
        std::uint64_t r = idx;
        for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
          l.rows[it->first][it->second] = r % q;
          r /= q;
        }
        fn(l);
      }
    }
}

std::vector<LineP3<FiniteField>> enumerate_lines_p3(const FiniteField& k) {
  std::vector<LineP3<FiniteField>> out;
  out.reserve(line_count_p3(k.order()));
  for_each_line_p3(k, [&](const LineP3<FiniteField>& l) { out.push_back(l); });
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return line_less(k, a, b); });
  return out;
}

}  // namespace cubic
