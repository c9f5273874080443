#ifndef CUBIC_ROOT_CONDITIONS_HPP
#define CUBIC_ROOT_CONDITIONS_HPP

#include <vector>

#include "cubic/embed.hpp"
#include "cubic/factor.hpp"

namespace cubic {

// True iff no three distinct roots of the squarefree polynomial G (in an
// algebraic closure) sum to zero.
//
// Over F_q the roots are listed in an explicit splitting field. Over Q the
// test goes through resultants: the pair-sum polynomial
// Res_y(G(y), G(x-y)) = D(x) S2(x)^2 with D(x) = prod (x - 2 t_i), then
// prod_k S2(x - t_k) = S3(x)^3 C(x) with C(x) = prod_{i != j} (x - 2 t_i - t_j),
// so S3(0) != 0 iff the left side is nonzero at 0, provided C(0) != 0.
// When C(0) = 0 the triple-sum power sums are formed directly from the
// power sums of the roots (Newton identities) instead.
bool triple_sum_free(const FqPoly& G, const FieldPtr& base);
bool triple_sum_free(const QPoly& G);

// Which route decided a rational instance (exposed for tests).
enum class TripleSumRoute { kResultant, kPowerSums };
bool triple_sum_free(const QPoly& G, TripleSumRoute* route);
// Power-sum route only (the independent path used as a cross-check).
bool triple_sum_free_power_sums(const QPoly& G);

// Eisenstein's criterion at the prime p for a monic integer polynomial.
bool eisenstein_check(const QPoly& f, unsigned long p);

// Eisenstein at the prime element z of k[z]: f = sum_i c_i(z) t^i with each
// c_i given by its coefficients in z (low to high). Monic in t required.
template <class F>
bool eisenstein_at_z(const F& k, const std::vector<std::vector<typename F::Elem>>& f) {
  if (f.empty()) throw std::invalid_argument("eisenstein_at_z: empty polynomial");
  const auto& top = f.back();
  bool monic = !top.empty() && k.eq(top[0], k.one());
  for (std::size_t j = 1; j < top.size(); ++j) monic = monic && k.is_zero(top[j]);
  if (!monic) throw std::invalid_argument("eisenstein_at_z: polynomial must be monic in t");
  if (f.size() < 2) return false;
  auto at = [&](std::size_t i, std::size_t j) {
    return j < f[i].size() ? f[i][j] : k.zero();
  };
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!k.is_zero(at(i, 0))) return false;
  return !k.is_zero(at(0, 1));
}

}  // namespace cubic

#endif  // CUBIC_ROOT_CONDITIONS_HPP
