#include "cubic/embed.hpp"

#include "cubic/linalg.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cubic {

Embedding::Embedding(FieldPtr src, FieldPtr dst, Elem root)
    : src_(std::move(src)), dst_(std::move(dst)), root_(root) {
  powers_.push_back(dst_->one());
  for (int i = 1; i < src_->degree(); ++i) powers_.push_back(dst_->mul(powers_.back(), root_));
}

Embedding::Elem Embedding::operator()(Elem a) const {
  if (src_->degree() == 1) return dst_->from_int(static_cast<std::int64_t>(a));
  Elem r = dst_->zero();
  const auto d = src_->digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    r = dst_->add(r, dst_->mul(dst_->from_int(static_cast<std::int64_t>(d[i])), powers_[i]));
  }
  return r;
}

FqPoly Embedding::map(const FqPoly& f) const {
  std::vector<Elem> c;
  for (auto x : f.coeffs()) c.push_back((*this)(x));
  return FqPoly(*dst_, std::move(c));
}

std::optional<Embedding::Elem> Embedding::preimage(Elem b) const {
  const int d = src_->degree(), n = dst_->degree();
  const auto& Fp = *FiniteField::get(src_->characteristic(), 1);
  // columns: digits of the images of 1, a, ..., a^(d-1); last column b
  Mat<FiniteField> m(n, Vec<FiniteField>(d + 1, 0));
  for (int i = 0; i < d; ++i) {
    const auto dig = dst_->digits(d == 1 ? dst_->one() : powers_[i]);
    for (int r = 0; r < n; ++r) m[r][i] = dig[r];
  }
  const auto bd = dst_->digits(b);
  for (int r = 0; r < n; ++r) m[r][d] = bd[r];
  const auto piv = rref(Fp, m);
  if (!piv.empty() && piv.back() == d) return std::nullopt;
  std::vector<std::uint64_t> digits(d, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) digits[piv[r]] = m[r][d];
  return src_->from_digits(digits);
}

namespace {

using Key = std::tuple<std::uint64_t, std::vector<std::uint64_t>, std::vector<std::uint64_t>>;

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<Key, FiniteField::Elem>& cache() {
  static std::map<Key, FiniteField::Elem> c;
  return c;
}

}  // namespace

Embedding embed(const FieldPtr& src, const FieldPtr& dst) {
  if (src->characteristic() != dst->characteristic() || dst->degree() % src->degree() != 0)
    throw std::invalid_argument("embed: source degree must divide destination degree");
  const auto p = src->characteristic();
  if (src->degree() == 1) return Embedding(src, dst, dst->zero());
  Key key{p, src->modulus(), dst->modulus()};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return Embedding(src, dst, it->second);
  }
  std::vector<FiniteField::Elem> mc;
  for (auto c : src->modulus()) mc.push_back(dst->from_int(static_cast<std::int64_t>(c)));
  const auto cands = roots(FqPoly(*dst, mc));
  if (cands.empty()) throw std::logic_error("embed: modulus has no root in destination");

  // Constraints from default-modulus subfields of the source.
  struct Constraint {
    FiniteField::Elem in_src, in_dst;
  };
  std::vector<Constraint> cons;
  for (int e = 2; e < src->degree(); ++e) {
    if (src->degree() % e != 0) continue;
    auto sub = FiniteField::get(p, e);
    cons.push_back({embed(sub, src)(sub->gen()), embed(sub, dst)(sub->gen())});
  }
  FiniteField::Elem chosen = 0;
  bool found = false;
  for (auto r : cands) {
    Embedding trial(src, dst, r);
    bool ok = true;
    for (const auto& c : cons)
      if (trial(c.in_src) != c.in_dst) {
        ok = false;
        break;
      }
    if (ok) {
      chosen = r;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("embed: no root compatible with subfield embeddings");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache().emplace(key, chosen);
  }
  return Embedding(src, dst, chosen);
}

SplitResult splitting_roots(const FqPoly& f, const FieldPtr& base) {
  int L = 1;
  for (const auto& [g, m] : factor(f).factors) L = std::lcm(L, g.degree());
  SplitResult res;
  res.degree_over_base = L;
  res.field = L == 1 ? base : FiniteField::get(base->characteristic(), base->degree() * L);
  if (L == 1) {
    res.roots = roots(f);
    return res;
  }
  auto e = embed(base, res.field);
  res.roots = roots(e.map(f));
  return res;
}

}  // namespace cubic
