#include "cubic/skew_triple.hpp"

#include <functional>

#include "cubic/embed.hpp"
#include "cubic/groebner.hpp"
#include "json.hpp"

namespace cubic {

const std::array<const char*, 12>& skew_coeff_names() {
  static const std::array<const char*, 12> n{"a0201", "a0102", "a2010", "a1020", "a0210", "a1002",
                                             "a1101", "a0111", "a0120", "a2001", "a1011", "a1110"};
  return n;
}

const std::array<Exps, 12>& skew_coeff_exps() {
  static const std::array<Exps, 12> e = [] {
    std::array<Exps, 12> out{};
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 4; ++j) out[i][j] = skew_coeff_names()[i][1 + j] - '0';
    return out;
  }();
  return e;
}

StandardEmbedding<FiniteField> embed_standard(const FieldPtr& k, const CubicForm<FiniteField>& f) {
  const auto ls = rational_lines(k, f);
  const auto& L = ls.lines;
  const int n = static_cast<int>(L.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (lines_intersect(*k, L[i], L[j])) continue;
      for (int l = j + 1; l < n; ++l)
        if (!lines_intersect(*k, L[i], L[l]) && !lines_intersect(*k, L[j], L[l]))
          return embed_standard(*k, f, L[i], L[j], L[l]);
    }
  throw SkewTripleError("no skew triple among the rational lines");
}

namespace {

// x0 -> x0 + c x1, x2 -> x2 + c x3 moves the pencil roots by -c; the swap
// x0 <-> x1, x2 <-> x3 inverts them. Both fix E1, E2, E3.
template <class F>
Mat<F> shift_matrix(const F& k, const typename F::Elem& c) {
  Mat<F> T(4, Vec<F>(4, k.zero()));
  for (int i = 0; i < 4; ++i) T[i][i] = k.one();
  T[0][1] = c;
  T[2][3] = c;
  return T;
}

template <class F>
Mat<F> swap_matrix(const F& k) {
  Mat<F> T(4, Vec<F>(4, k.zero()));
  T[0][1] = T[1][0] = T[2][3] = T[3][2] = k.one();
  return T;
}

template <class F>
struct Chart {
  std::string name;
  SkewTripleForm<F> form;
};

// Identity, then shifts, then a shift followed by the swap.
template <class F>
std::vector<Chart<F>> charts(const F& k, const SkewTripleForm<F>& s,
                             const std::vector<typename F::Elem>& shifts) {
  std::vector<Chart<F>> out{{"identity", s}};
  const auto f = to_cubic(k, s);
  for (const auto& c : shifts)
    if (!k.is_zero(c))
      out.push_back({"shift " + k.to_string(c), from_cubic(k, substitute(k, f, shift_matrix(k, c)))});
  for (const auto& c : shifts)
    out.push_back({"shift " + k.to_string(c) + ", swap",
                   from_cubic(k, substitute(k, f, matmul(k, shift_matrix(k, c), swap_matrix(k))))});
  return out;
}

void assign_case(ClassifyReport& r, int rational_g_roots, int s_roots) {
  r.rational_s_roots = s_roots;
  r.resolved_by = "g,h";
  if (s_roots == 1)
    throw ImpossibleCaseError("exactly one rational root of h (case " +
                              std::string(rational_g_roots == 3 ? "3b" : "2b") + ")");
  if (rational_g_roots == 3) {
    r.case_tag = s_roots == 2 ? "3c" : "3a";
    r.count = s_roots == 2 ? 27 : 15;
  } else {
    r.case_tag = s_roots == 2 ? "2c" : "2a";
    r.count = s_roots == 2 ? 15 : 7;
  }
  r.candidates = {*r.count};
}

// Rational roots of a monic quadratic with coefficients in a number field:
// r^2 + B r + C = 0 splits into one equation per basis coordinate.
int rational_roots_over(const NumberField& K, const Poly<NumberField>& h) {
  const auto& Q = RationalField::instance();
  const auto B = h.coeff(1), C = h.coeff(0);
  QPoly g(Q, {C[0], B[0], mpq_class(1)});
  for (int j = 1; j < K.degree(); ++j) g = gcd(g, QPoly(Q, {C[j], B[j]}));
  if (g.degree() <= 0) return g.is_zero() ? 2 : 0;
  return static_cast<int>(roots(g.monic()).size());
}

template <class F>
bool distinct_roots(const Poly<F>& g) {
  return is_squarefree(g);
}

}  // namespace

ClassifyReport classify(const SkewTripleForm<RationalField>& s) {
  const auto& Q = RationalField::instance();
  if (!is_smooth(Q, to_cubic(Q, s))) throw NotSmoothError();
  ClassifyReport r;
  r.field = "Q";
  std::vector<mpq_class> shifts;
  for (int c = 0; c <= 6; ++c) {
    shifts.emplace_back(c);
    if (c) shifts.emplace_back(-c);
  }
  for (const auto& ch : charts(Q, s, shifts)) {
    if (Q.is_zero(ch.form[kA2010])) {
      r.transcript.push_back(ch.name + ": a2010 = 0");
      continue;
    }
    const QPoly g = g_of(Q, ch.form);
    if (!distinct_roots(g)) throw ImpossibleCaseError("g has a repeated root on a smooth surface");
    const auto R = roots(g);
    r.chart = ch.name;
    r.g = to_string(g, "t");
    r.g_factor_degrees = factor(g).degrees();
    if (R.empty()) {
      r.case_tag = "1";
      r.candidates = {3, 9};
      r.count.reset();
      r.resolved_by = "";
      r.transcript.push_back("g has no rational root; h does not decide 3 versus 9");
      return r;
    }
    if (R.size() == 3) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          try {
            const auto h = h_of(Q, ch.form.a, R[i], R[j]);
            r.t4 = R[i].get_str();
            r.t5 = R[j].get_str();
            r.t5_field = "Q";
            r.h = to_string(h, "s");
            assign_case(r, 3, static_cast<int>(roots(h).size()));
            return r;
          } catch (const PivotError& e) {
            r.transcript.push_back(ch.name + ", t4=" + R[i].get_str() + ", t5=" + R[j].get_str() + ": " + e.what());
          }
        }
      continue;
    }
    if (R.size() != 1) throw ImpossibleCaseError("g has exactly two rational roots");
    const mpq_class t4 = R[0];
    const QPoly q = (g / QPoly(Q, {-t4, mpq_class(1)})).monic();
    const NumberField K(q.coeffs());
    std::array<NumberField::Elem, 12> a;
    for (int i = 0; i < 12; ++i) a[i] = K.from_rational(ch.form[i]);
    const auto w = K.gen();
    for (const auto& t5 : {w, K.sub(K.from_rational(-q.coeff(1)), w)}) {
      try {
        const auto h = h_of(K, a, K.from_rational(t4), t5);
        r.t4 = t4.get_str();
        r.t5 = K.to_string(t5);
        r.t5_field = K.name();
        r.h = to_string(h, "s");
        assign_case(r, 1, rational_roots_over(K, h));
        return r;
      } catch (const PivotError& e) {
        r.transcript.push_back(ch.name + ", t5=" + K.to_string(t5) + ": " + e.what());
      }
    }
  }
  throw std::runtime_error("classify: every chart and root labelling hit a zero pivot");
}

ClassifyReport classify(const FieldPtr& kp, const SkewTripleForm<FiniteField>& s) {
  const FiniteField& k = *kp;
  const auto f = to_cubic(k, s);
  if (!is_smooth(k, f)) throw NotSmoothError();
  ClassifyReport r;
  r.field = kp->header();
  std::vector<FiniteField::Elem> shifts;
  for (FiniteField::Elem c = 0; c < std::min<std::uint64_t>(k.order(), 64); ++c) shifts.push_back(c);
  for (const auto& ch : charts(k, s, shifts)) {
    if (k.is_zero(ch.form[kA2010])) {
      r.transcript.push_back(ch.name + ": a2010 = 0");
      continue;
    }
    const FqPoly g = g_of(k, ch.form);
    if (!distinct_roots(g)) throw ImpossibleCaseError("g has a repeated root on a smooth surface");
    const auto R = roots(g);
    r.chart = ch.name;
    r.g = to_string(g, "t");
    r.g_factor_degrees = factor(g).degrees();
    if (R.empty()) {
      const int n = static_cast<int>(rational_lines(kp, f).lines.size());
      if (n != 3 && n != 9) throw ImpossibleCaseError("g irreducible but " + std::to_string(n) + " lines");
      r.case_tag = "1";
      r.candidates = {3, 9};
      r.count = n;
      r.resolved_by = "enumeration";
      return r;
    }
    if (R.size() == 3) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          try {
            const auto h = h_of(k, ch.form.a, R[i], R[j]);
            r.t4 = k.to_string(R[i]);
            r.t5 = k.to_string(R[j]);
            r.t5_field = kp->header();
            r.h = to_string(h, "s");
            assign_case(r, 3, static_cast<int>(roots(h).size()));
            return r;
          } catch (const PivotError& e) {
            r.transcript.push_back(ch.name + ", t4=" + k.to_string(R[i]) + ", t5=" + k.to_string(R[j]) + ": " +
                                   e.what());
          }
        }
      continue;
    }
    if (R.size() != 1) throw ImpossibleCaseError("g has exactly two rational roots");
    const auto t4 = R[0];
    const FqPoly q = g / FqPoly(k, {k.neg(t4), k.one()});
    const FieldPtr K2 = FiniteField::get(k.characteristic(), 2 * k.degree());
    const Embedding e = embed(kp, K2);
    std::array<FiniteField::Elem, 12> a;
    for (int i = 0; i < 12; ++i) a[i] = e(ch.form[i]);
    for (const auto& t5 : roots(e.map(q))) {
      try {
        const auto h = h_of(*K2, a, e(t4), t5);
        int rational = 0;
        for (const auto& x : roots(h))
          if (e.preimage(x)) ++rational;
        r.t4 = k.to_string(t4);
        r.t5 = K2->to_string(t5);
        r.t5_field = K2->header();
        r.h = to_string(h, "s");
        assign_case(r, 1, rational);
        return r;
      } catch (const PivotError& err) {
        r.transcript.push_back(ch.name + ", t5=" + K2->to_string(t5) + ": " + err.what());
      }
    }
  }
  throw std::runtime_error("classify: every chart and root labelling hit a zero pivot");
}

std::string report_json(const ClassifyReport& r) {
  nlohmann::json j;
  j["field"] = r.field;
  j["chart"] = r.chart;
  j["g"] = r.g;
  j["g_factor_degrees"] = r.g_factor_degrees;
  j["t4"] = r.t4;
  j["t5"] = r.t5;
  j["t5_field"] = r.t5_field;
  j["h"] = r.h;
  if (r.rational_s_roots >= 0) j["rational_s_roots"] = r.rational_s_roots;
  j["case"] = r.case_tag;
  j["count"] = r.count ? nlohmann::json(*r.count) : nlohmann::json(nullptr);
  j["candidates"] = r.candidates;
  j["resolved_by"] = r.resolved_by;
  j["transcript"] = r.transcript;
  return j.dump(2);
}

SkewTripleForm<FiniteField> random_smooth_skew_form(const FiniteField& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, k.order() - 1);
  while (true) {
    std::array<FiniteField::Elem, 8> v;
    for (auto& x : v) x = pick(rng);
    auto s = skew_form_from_free(k, v);
    const auto f = to_cubic(k, s);
    if (!f.is_zero(k) && is_smooth(k, f)) return s;
  }
}

}  // namespace cubic
