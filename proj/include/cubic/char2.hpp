#ifndef CUBIC_CHAR2_HPP
#define CUBIC_CHAR2_HPP

#include <string>
#include <vector>

#include "cubic/factor.hpp"

namespace cubic {

using Elem2 = FiniteField::Elem;

struct IrredCertificate {
  FqPoly poly;
  std::string recipe;  // artin-schreier, cubic-image, quartic-trace, quintic-count, sextic-palindrome, shift
  std::vector<std::string> transcript;
  bool irreducible = false;
  bool triple_sum_free = false;
};

// F_{2^d} with the default modulus.
FieldPtr gf2(int d);

// The generator if it is primitive, else the least primitive element.
Elem2 primitive_generator(const FiniteField& k);

// All b (ascending) with t^2 + s t + b irreducible; s = 1 gives the
// complement of the image of x^2 + x.
std::vector<Elem2> artin_schreier_complement(const FieldPtr& k);
std::vector<Elem2> quadratic_complement(const FieldPtr& k, Elem2 s);

// Least nonzero c outside the image of x^3 + y x^2.
Elem2 cubic_constant(const FieldPtr& k, Elem2 y);

// Least gamma of absolute trace 1.
Elem2 trace_one_element(const FieldPtr& k);

enum class QuarticVariant { kUnit, kPrimitive };

// t^4 + (b+1) t^2 + b t + gamma b^2 (unit) or
// t^4 + (a^2+b) t^2 + a b t + gamma b^2 (primitive, a the primitive generator).
IrredCertificate build_quartic(const FieldPtr& k, QuarticVariant variant, Elem2 b, Elem2 gamma);

// First irreducible t^5 + t^4 + e1 t^3 + e2 t^2 + e3 t + e4 with e2 != 1 or
// e1 + e3 + e4 != 1.
IrredCertificate quintic_search(const FieldPtr& k);

// First irreducible t^6 + t^5 + f1 t^4 + f0 t^3 + f1 t^2 + t + 1 found by
// the trace test Tr(f1/f0) = 1 with t^3 + t^2 + f1 t + f0 irreducible, then
// by the same test on f1 + 1; every candidate is factored.
IrredCertificate sextic_search(const FieldPtr& k);

// Brute-force counts over monic polynomials of the given degree.
long long count_irreducibles(const FieldPtr& k, int deg);
long long count_with_subleading(const FieldPtr& k, int deg, Elem2 a);

// f irreducible iff f(t - a) irreducible, for every monic f of degree deg
// and every a; also checks the shift is injective on each irreducible.
bool check_shift_lemma(const FieldPtr& k, int deg);

// Sextic for blow-up pattern `item` (1..11) over F_{2^d}, following the
// explicit recipes; factors listed in pattern order.
struct SexticBuild {
  FqPoly G;
  std::vector<FqPoly> factors;
  std::vector<std::string> transcript;
};
SexticBuild char2_sextic(const FieldPtr& k, int item);

}  // namespace cubic

#endif  // CUBIC_CHAR2_HPP
