#ifndef CUBIC_GROEBNER_HPP
#define CUBIC_GROEBNER_HPP

#include <array>
#include <vector>

#include "cubic/cubic_form.hpp"

namespace cubic {

// Homogeneous polynomials in x0..x3, stored densely per degree in
// degrevlex order (index 0 is the largest monomial).
class MonomialTable {
 public:
  static constexpr int kMaxDegree = 12;
  static const MonomialTable& instance();

  const std::vector<Exps>& of_degree(int d) const { return by_degree_[d]; }
  int index(const Exps& e) const { return index_[key(e)]; }

 private:
  MonomialTable();
  static int key(const Exps& e) { return ((e[0] * 13 + e[1]) * 13 + e[2]) * 13 + e[3]; }
  std::array<std::vector<Exps>, kMaxDegree + 1> by_degree_;
  std::vector<int> index_;
};

template <class F>
struct HomPoly {
  int degree = 0;
  Vec<F> c;  // indexed by MonomialTable::of_degree(degree)
  int lead = -1;  // index of the leading monomial, -1 for zero
};

// Truncated Groebner basis of a homogeneous ideal: every S-pair of degree
// <= max_degree is processed, so the leading-term ideal is exact through
// that degree.
template <class F>
class TruncatedGroebner {
 public:
  TruncatedGroebner(const F& k, int max_degree) : k_(k), max_degree_(max_degree) {}

  void add_generator(HomPoly<F> g) { pending_.push_back(std::move(g)); }

  void run() {
    for (int d = 0; d <= max_degree_; ++d) {
      std::vector<HomPoly<F>> cands;
      for (auto& g : pending_)
        if (g.degree == d) cands.push_back(g);
      for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j) {
          const Exps& a = lead_exps(basis_[i]);
          const Exps& b = lead_exps(basis_[j]);
          Exps l;
          int dl = 0;
          bool coprime = true;
          for (int v = 0; v < 4; ++v) {
            l[v] = std::max(a[v], b[v]);
            dl += l[v];
            if (a[v] && b[v]) coprime = false;
          }
          if (dl != d || coprime) continue;
          auto s = shifted(basis_[i], minus(l, a));
          auto t = shifted(basis_[j], minus(l, b));
          for (std::size_t m = 0; m < s.c.size(); ++m) s.c[m] = k_.sub(s.c[m], t.c[m]);
          cands.push_back(std::move(s));
        }
      for (auto& c : cands) {
        reduce(c);
        if (c.lead < 0) continue;
        const auto inv = k_.inv(c.c[c.lead]);
        for (auto& x : c.c) x = k_.mul(x, inv);
        basis_.push_back(std::move(c));
      }
    }
  }

  const std::vector<HomPoly<F>>& basis() const { return basis_; }

  // True iff x_v^e is a leading monomial for every variable v.
  bool has_all_pure_powers() const {
    std::array<bool, 4> seen{};
    for (const auto& g : basis_) {
      const Exps& e = lead_exps(g);
      int nz = 0, var = -1;
      for (int v = 0; v < 4; ++v)
        if (e[v]) {
          ++nz;
          var = v;
        }
      if (nz == 1) seen[var] = true;
    }
    return seen[0] && seen[1] && seen[2] && seen[3];
  }

 private:
  static Exps minus(const Exps& a, const Exps& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}; }
  const Exps& lead_exps(const HomPoly<F>& g) const {
    return MonomialTable::instance().of_degree(g.degree)[g.lead];
  }
  HomPoly<F> shifted(const HomPoly<F>& g, const Exps& m) const {
    const auto& T = MonomialTable::instance();
    const int dm = m[0] + m[1] + m[2] + m[3];
    HomPoly<F> r;
    r.degree = g.degree + dm;
    r.c.assign(T.of_degree(r.degree).size(), k_.zero());
    const auto& src = T.of_degree(g.degree);
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      if (k_.is_zero(g.c[i])) continue;
      const Exps& e = src[i];
      r.c[T.index({e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]})] = g.c[i];
    }
    return r;
  }
  void reduce(HomPoly<F>& p) const {
    const auto& T = MonomialTable::instance();
    const auto& mons = T.of_degree(p.degree);
    p.lead = -1;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      if (k_.is_zero(p.c[i])) continue;
      const HomPoly<F>* div = nullptr;
      Exps q{};
      for (const auto& g : basis_) {
        if (g.degree > p.degree) continue;
        const Exps& e = lead_exps(g);
        bool ok = true;
        for (int v = 0; v < 4; ++v) {
          q[v] = mons[i][v] - e[v];
          if (q[v] < 0) ok = false;
        }
        if (ok) {
          div = &g;
          break;
        }
      }
      if (!div) {
        if (p.lead < 0) p.lead = static_cast<int>(i);
        continue;
      }
      const auto coef = p.c[i];
      const auto& gm = T.of_degree(div->degree);
      for (std::size_t j = 0; j < div->c.size(); ++j) {
        if (k_.is_zero(div->c[j])) continue;
        const Exps& e = gm[j];
        const int at = T.index({e[0] + q[0], e[1] + q[1], e[2] + q[2], e[3] + q[3]});
        p.c[at] = k_.sub(p.c[at], k_.mul(coef, div->c[j]));
      }
    }
  }

  const F& k_;
  int max_degree_;
  std::vector<HomPoly<F>> pending_;
  std::vector<HomPoly<F>> basis_;
};

// Degree through which the truncated basis of (f, df/dx_i) decides
// emptiness: the partials of a smooth cubic form a regular sequence of
// quadrics when 3 is invertible (everything of degree 5 lies in the
// ideal); in characteristic 3 four generic cubics of the ideal do, giving 9.
inline int smoothness_degree(std::uint64_t characteristic) { return characteristic == 3 ? 9 : 5; }

template <class F>
bool is_smooth(const F& k, const CubicForm<F>& f) {
  if (f.is_zero(k)) throw std::invalid_argument("is_smooth: zero form");
  const auto& T = MonomialTable::instance();
  TruncatedGroebner<F> gb(k, smoothness_degree(k.characteristic()));
  HomPoly<F> h;
  h.degree = 3;
  h.c.assign(T.of_degree(3).size(), k.zero());
  const auto& mons = cubic_monomials();
  for (int m = 0; m < 20; ++m) h.c[T.index(mons[m])] = f.c[m];
  gb.add_generator(h);
  for (int i = 0; i < 4; ++i) {
    HomPoly<F> d;
    d.degree = 2;
    d.c.assign(T.of_degree(2).size(), k.zero());
    bool nz = false;
    for (const auto& [e, c] : partial(k, f, i)) {
      d.c[T.index(e)] = c;
      nz = true;
    }
    if (nz) gb.add_generator(d);
  }
  gb.run();
  return gb.has_all_pure_powers();
}

}  // namespace cubic

#endif  // CUBIC_GROEBNER_HPP
