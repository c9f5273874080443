#ifndef CUBIC_FACTOR_HPP
#define CUBIC_FACTOR_HPP

#include <utility>
#include <vector>

#include "cubic/finite_field.hpp"
#include "cubic/poly.hpp"
#include "cubic/rational.hpp"

namespace cubic {

using FqPoly = Poly<FiniteField>;
using QPoly = Poly<RationalField>;

template <class F>
struct Factorization {
  const F* field;
  typename F::Elem unit;
  std::vector<std::pair<Poly<F>, int>> factors;  // monic irreducibles

  Poly<F> product() const;
  std::vector<int> degrees() const;  // with multiplicity, ascending
};

// Over F_q: squarefree split, distinct-degree split, Cantor-Zassenhaus.
Factorization<FiniteField> factor(const FqPoly& f);
// Over Q, degree at most 8: modular factorisation, Hensel lifting and
// trial recombination (no lattice reduction).
Factorization<RationalField> factor(const QPoly& f);

bool is_irreducible(const FqPoly& f);
bool is_irreducible(const QPoly& f);

bool is_squarefree(const FqPoly& f);
bool is_squarefree(const QPoly& f);

// Roots in the coefficient field, ascending in canonical order, without
// multiplicity.
std::vector<FiniteField::Elem> roots(const FqPoly& f);
std::vector<mpq_class> roots(const QPoly& f);

// x^(q^k) mod m for the coefficient field F_q.
FqPoly frobenius_power_of_x(const FqPoly& m, int k);

template <class F>
Poly<F> Factorization<F>::product() const {
  Poly<F> r = Poly<F>::constant(*field, unit);
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

template <class F>
std::vector<int> Factorization<F>::degrees() const {
  std::vector<int> d;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) d.push_back(p.degree());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace cubic

#endif  // CUBIC_FACTOR_HPP
