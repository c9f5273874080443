#ifndef CUBIC_EMBED_HPP
#define CUBIC_EMBED_HPP

#include <optional>
#include <vector>

#include "cubic/factor.hpp"
#include "cubic/finite_field.hpp"

namespace cubic {

// Ring embedding F_{p^d} -> F_{p^n} (d | n), fixed by the image of the
// source generator. The image is the least root of the source modulus
// that is consistent with the embeddings of every default-modulus
// intermediate field, so compositions along towers agree with the direct
// map.
class Embedding {
 public:
  using Elem = FiniteField::Elem;

  Embedding(FieldPtr src, FieldPtr dst, Elem root);

  const FiniteField& src() const { return *src_; }
  const FiniteField& dst() const { return *dst_; }
  FieldPtr src_ptr() const { return src_; }
  FieldPtr dst_ptr() const { return dst_; }
  Elem root() const { return powers_.size() > 1 ? powers_[1] : root_; }

  Elem operator()(Elem a) const;
  FqPoly map(const FqPoly& f) const;
  // The source element mapping to b, if b lies in the image.
  std::optional<Elem> preimage(Elem b) const;

 private:
  FieldPtr src_, dst_;
  Elem root_;
  std::vector<Elem> powers_;
};

Embedding embed(const FieldPtr& src, const FieldPtr& dst);

// Smallest extension of F_q containing every root of f, with the roots.
struct SplitResult {
  FieldPtr field;
  int degree_over_base = 1;
  std::vector<FiniteField::Elem> roots;  // ascending, without multiplicity
};
SplitResult splitting_roots(const FqPoly& f, const FieldPtr& base);

}  // namespace cubic

#endif  // CUBIC_EMBED_HPP
