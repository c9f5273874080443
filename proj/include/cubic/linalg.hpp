#ifndef CUBIC_LINALG_HPP
#define CUBIC_LINALG_HPP

#include <vector>

namespace cubic {

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Mat = std::vector<Vec<F>>;

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot columns.
template <class F>
std::vector<int> rref(const F& k, Mat<F>& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!k.is_zero(m[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const auto inv = k.inv(m[r][c]);
    for (int j = c; j < cols; ++j) m[r][j] = k.mul(m[r][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || k.is_zero(m[i][c])) continue;
      const auto f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class F>
int rank(const F& k, Mat<F> m) {
  return static_cast<int>(rref(k, m).size());
}

template <class F>
typename F::Elem det(const F& k, Mat<F> m) {
  const int n = static_cast<int>(m.size());
  auto d = k.one();
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!k.is_zero(m[i][c])) {
        sel = i;
        break;
      }
    if (sel < 0) return k.zero();
    if (sel != c) {
      std::swap(m[c], m[sel]);
      d = k.neg(d);
    }
    d = k.mul(d, m[c][c]);
    const auto inv = k.inv(m[c][c]);
    for (int i = c + 1; i < n; ++i) {
      if (k.is_zero(m[i][c])) continue;
      const auto f = k.mul(m[i][c], inv);
      for (int j = c; j < n; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, m[c][j]));
    }
  }
  return d;
}

// Basis of {v : m v = 0}, each vector with a 1 in its free coordinate.
template <class F>
Mat<F> kernel(const F& k, Mat<F> m, int cols) {
  const auto piv = rref(k, m);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat<F> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec<F> v(cols, k.zero());
    v[f] = k.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = k.neg(m[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Mat<F> matmul(const F& k, const Mat<F>& a, const Mat<F>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  Mat<F> c(n, Vec<F>(m, k.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (k.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = k.add(c[i][j], k.mul(a[i][l], b[l][j]));
    }
  return c;
}

// Inverse of a square matrix, or empty if singular.
template <class F>
Mat<F> inverse(const F& k, const Mat<F>& a) {
  const int n = static_cast<int>(a.size());
  Mat<F> m(n);
  for (int i = 0; i < n; ++i) {
    m[i] = a[i];
    for (int j = 0; j < n; ++j) m[i].push_back(i == j ? k.one() : k.zero());
  }
  const auto piv = rref(k, m);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return {};
  Mat<F> out(n);
  for (int i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

}  // namespace cubic

#endif  // CUBIC_LINALG_HPP
