#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubic/blowup.hpp"
#include "cubic/char2.hpp"
#include "cubic/graph.hpp"
#include "cubic/groebner.hpp"
#include "cubic/skew_triple.hpp"
#include "cubic/surface.hpp"
#include "cubic/sweep.hpp"
#include "cubic/text_format.hpp"
#include "cubic/weyl.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace cubic;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kRefused = 3;
constexpr int kInternal = 4;

class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  bool text = false;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Output& o, const json& j) {
  if (o.text)
    flatten(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

template <class F>
CubicForm<F> read_surface(const F& k, const std::string& coeffs, const std::string& poly) {
  if (!poly.empty()) return parse_cubic(k, poly);
  if (coeffs.empty()) throw std::invalid_argument("give --poly or --coeffs");
  std::vector<typename F::Elem> c;
  std::stringstream ss(coeffs);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_element(k, item));
  return cubic_from_coeffs(k, c);
}

template <class F>
json coeffs_json(const F& k, const CubicForm<F>& f) {
  json a = json::array();
  for (const auto& c : f.c) a.push_back(k.to_string(c));
  return a;
}

template <class F>
bool has_skew_triple(const F& k, const std::vector<LineP3<F>>& L) {
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      if (lines_intersect(k, L[i], L[j])) continue;
      for (std::size_t l = j + 1; l < L.size(); ++l)
        if (!lines_intersect(k, L[i], L[l]) && !lines_intersect(k, L[j], L[l])) return true;
    }
  return false;
}

template <class F>
json graph_report(const F& k, const std::vector<LineP3<F>>& lines) {
  const Graph g = intersection_graph(k, lines);
  json j = json::parse(graph_json(g));
  const bool skew = has_skew_triple(k, lines);
  j["skew_triple"] = skew;
  if (!skew) j["permissible"] = is_permissible(g);
  return j;
}

int lines_finite(const Output& o, const FieldPtr& k, const CubicForm<FiniteField>& f, bool solve) {
  json j;
  j["field"] = k->header();
  j["coeffs"] = coeffs_json(*k, f);
  const bool smooth = is_smooth(*k, f);
  j["smooth"] = smooth;
  if (!smooth) {
    j["notice"] = "surface is singular; line counts are only reported for smooth surfaces";
    emit(o, j);
    return kRefused;
  }
  bool ok = true;
  const auto ls = rational_lines(k, f);
  const int n = static_cast<int>(ls.lines.size());
  j["count"] = n;
  json lines = json::array();
  for (const auto& l : ls.lines) lines.push_back({{"span", to_string(*k, l)}, {"min_def_degree", 1}});
  j["lines"] = lines;
  j["admissible_count"] = is_admissible_line_count(n);
  ok = ok && is_admissible_line_count(n);
  j["graph"] = graph_report(*k, ls.lines);
  if (k->order() <= 64) {
    std::uint64_t pts = 0;
    for (const auto& p : projective_points(*k, 3))
      if (k->is_zero(evaluate(*k, f, p))) ++pts;
    j["rational_points"] = pts;
  }
  if (solve) {
    const auto all = all_27_lines(k, f);
    const Graph g = intersection_graph(*all.ext, all.lines);
    bool regular = true;
    for (int v = 0; v < g.n; ++v) regular = regular && g.degree(v) == 10;
    json s;
    s["extension_degree"] = all.ext_degree;
    s["cycle_type"] = frobenius_cycle_type(all);
    s["lines"] = static_cast<int>(all.lines.size());
    s["ten_regular"] = regular;
    s["coplanar_triples"] = g.triangles().size();
    json all_lines = json::array();
    for (std::size_t i = 0; i < all.lines.size(); ++i)
      all_lines.push_back({{"span", to_string(*all.ext, all.lines[i])}, {"min_def_degree", all.min_degree[i]}});
    s["all_lines"] = all_lines;
    j["splitting"] = s;
    int rational = 0;
    for (int d : all.min_degree) rational += d == 1;
    ok = ok && all.lines.size() == 27 && regular && g.triangles().size() == 45 && rational == n;
  }
  j["checks_passed"] = ok;
  emit(o, j);
  return ok ? kOk : kCheckFailed;
}

// Over Q lines cannot be enumerated; report containment of the given lines
// and of every line spanned by two points with coordinates in {-1,0,1}.
int lines_rational(const Output& o, const CubicForm<RationalField>& f, const std::vector<std::string>& given) {
  const auto& Q = RationalField::instance();
  json j;
  j["field"] = "Q";
  j["coeffs"] = coeffs_json(Q, f);
  const bool smooth = is_smooth(Q, f);
  j["smooth"] = smooth;
  std::vector<LineP3<RationalField>> found;
  auto add = [&](const LineP3<RationalField>& l) {
    for (const auto& m : found)
      if (m == l) return;
    found.push_back(l);
  };
  json checked = json::array();
  for (const auto& text : given) {
    const auto sp = text.find(',');
    if (sp == std::string::npos) throw std::invalid_argument("--line takes two linear forms separated by ','");
    Vec<RationalField> eq[2];
    for (int r = 0; r < 2; ++r) {
      const auto part = r == 0 ? text.substr(0, sp) : text.substr(sp + 1);
      const auto e = parse_expression(Q, part, {"x0", "x1", "x2", "x3"});
      eq[r].assign(4, 0);
      for (const auto& [m, c] : e) {
        int idx = -1, deg = 0;
        for (int i = 0; i < 4; ++i) {
          deg += m[i];
          if (m[i] == 1) idx = i;
        }
        if (deg != 1) throw std::invalid_argument("--line forms must be linear");
        eq[r][idx] = c;
      }
    }
    const auto l = LineP3<RationalField>::from_equations(Q, eq[0], eq[1]);
    const bool in = line_in_surface(Q, f, l);
    checked.push_back({{"line", text}, {"contained", in}});
    if (in) add(l);
  }
  j["given_lines"] = checked;
  std::vector<Vec<RationalField>> pts;
  for (int a = 0; a < 81; ++a) {
    Vec<RationalField> p(4);
    int t = a, lead = 0;
    for (int i = 0; i < 4; ++i) {
      p[i] = t % 3 - 1;
      t /= 3;
    }
    for (int i = 3; i >= 0 && lead == 0; --i) lead = sgn(p[i]);
    if (lead == 1) pts.push_back(p);
  }
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (!Q.is_zero(evaluate(Q, f, pts[a])) || !Q.is_zero(evaluate(Q, f, pts[b]))) continue;
      const auto l = LineP3<RationalField>::span(Q, pts[a], pts[b]);
      if (line_in_surface(Q, f, l)) add(l);
    }
  json lines = json::array();
  for (const auto& l : found) lines.push_back({{"span", to_string(Q, l)}, {"min_def_degree", 1}});
  j["lines_found"] = lines;
  j["count_found"] = found.size();
  j["note"] = "search over given lines and lines through points with coordinates in {-1,0,1}; not exhaustive";
  if (!found.empty()) j["graph"] = graph_report(Q, found);
  emit(o, j);
  return smooth ? kOk : kRefused;
}

int cmd_weyl(const Output& o) {
  json j;
  const auto& group = automorphism_group();
  const auto counts = possible_fixed_counts();
  j["group_order"] = group.size();
  j["fixed_line_counts"] = counts;
  j["double_sixes"] = double_sixes().size();
  const bool ok = group.size() == 51840 && counts == std::set<int>{0, 1, 2, 3, 5, 7, 9, 15, 27};
  j["checks_passed"] = ok;
  emit(o, j);
  return ok ? kOk : kCheckFailed;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

json polys_json(const std::vector<FqPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, "t"));
  return a;
}

int cmd_construct(const Output& o, const FieldSpec& fs, const std::string& pattern, const std::string& case_tag) {
  const auto p = pattern_from_degrees(parse_ints(pattern), case_tag);
  const auto predicted = predicted_count(p);
  json j;
  j["pattern"] = pattern_text(p);
  j["item"] = p.item;
  j["predicted_count"] = predicted.count;
  json labels = json::array();
  for (int v : predicted.labels) labels.push_back(label_name(v));
  j["predicted_lines"] = labels;
  if (fs.rational) {
    const auto r = construct_rational(p);
    const auto& Q = RationalField::instance();
    j["field"] = "Q";
    j["G"] = to_string(r.G, "t");
    json fac = json::array();
    for (const auto& f : r.factors) fac.push_back(to_string(f, "t"));
    j["factors"] = fac;
    j["surface"] = to_string(Q, r.surface);
    const auto chk = check_sextic(r.G, p.degrees);
    j["sextic_conditions"] = chk.ok() ? "ok" : chk.failed();
    const bool smooth = is_smooth(Q, r.surface);
    j["smooth"] = smooth;
    j["checks_passed"] = chk.ok() && smooth;
    emit(o, j);
    return chk.ok() && smooth ? kOk : kCheckFailed;
  }
  Construction c;
  try {
    c = construct_surface(fs.finite, p);
  } catch (const ConstructionError& e) {
    throw Refused(e.what());
  }
  j["field"] = fs.finite->header();
  j["source"] = c.source;
  if (c.G) j["G"] = to_string(*c.G, "t");
  j["factors"] = polys_json(c.factors);
  j["point_field"] = c.point_field;
  j["orbits"] = c.orbits;
  j["surface"] = to_string(*fs.finite, c.surface);
  j["transcript"] = c.transcript;
  const auto x = cross_validate(c);
  j["smooth"] = x.smooth;
  j["enumerated_count"] = x.enumerated;
  j["graph_isomorphic"] = x.graph_isomorphic;
  j["checks_passed"] = x.ok();
  emit(o, j);
  return x.ok() ? kOk : kCheckFailed;
}

int cmd_classify(const Output& o, const FieldSpec& fs, const std::vector<std::string>& coeffs,
                 const std::string& poly) {
  ClassifyReport r;
  json extra;
  if (fs.rational) {
    const auto& Q = RationalField::instance();
    SkewTripleForm<RationalField> s;
    if (!poly.empty()) {
      s = from_cubic(Q, parse_cubic(Q, poly));
    } else {
      std::vector<mpq_class> c;
      for (const auto& t : coeffs) c.push_back(parse_element(Q, t));
      s = skew_form_from_coeffs(Q, c);
    }
    r = classify(s);
  } else {
    const FiniteField& k = *fs.finite;
    SkewTripleForm<FiniteField> s;
    if (!poly.empty()) {
      const auto f = parse_cubic(k, poly);
      try {
        s = from_cubic(k, f);
      } catch (const SkewTripleError&) {
        if (!is_smooth(k, f)) throw NotSmoothError();
        const auto e = embed_standard(fs.finite, f);
        s = e.form;
        json T = json::array();
        for (const auto& row : e.T) {
          json rj = json::array();
          for (const auto& x : row) rj.push_back(k.to_string(x));
          T.push_back(rj);
        }
        extra["embedding"] = T;
      }
    } else {
      std::vector<FiniteField::Elem> c;
      for (const auto& t : coeffs) c.push_back(parse_element(k, t));
      s = skew_form_from_coeffs(k, c);
    }
    r = classify(fs.finite, s);
  }
  json j = json::parse(report_json(r));
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  emit(o, j);
  return kOk;
}

int cmd_permissible(const Output& o, int n, bool lemma) {
  const auto cat = permissible_catalog(n);
  json j;
  j["order"] = n;
  json gs = json::array();
  for (const auto& g : cat) gs.push_back(json::parse(graph_json(g)));
  j["graphs"] = gs;
  bool ok = n <= 6 ? cat.size() == 1 : cat.empty();
  if (lemma) {
    const long long examined = check_order7_triangle_lemma();
    j["order7_lemma"] = {{"graphs_examined", examined}, {"holds", examined >= 0}};
    ok = ok && examined >= 0;
  }
  j["checks_passed"] = ok;
  emit(o, j);
  return ok ? kOk : kCheckFailed;
}

json certificate_json(const IrredCertificate& c) {
  return {{"poly", to_string(c.poly, "t")},
          {"recipe", c.recipe},
          {"irreducible", c.irreducible},
          {"triple_sum_free", c.triple_sum_free},
          {"transcript", c.transcript}};
}

int cmd_irred2(const Output& o, int d, const std::string& which, int item) {
  const FieldPtr k = gf2(d);
  json j;
  j["field"] = k->header();
  j["which"] = which;
  bool ok = true;
  if (which == "quadratic") {
    const auto bs = artin_schreier_complement(k);
    json a = json::array();
    for (auto b : bs) a.push_back(k->to_string(b));
    j["b"] = a;
    ok = !bs.empty();
  } else if (which == "cubic") {
    j["c"] = k->to_string(cubic_constant(k, k->one()));
  } else if (which == "quartic") {
    const auto bs = artin_schreier_complement(k);
    if (bs.empty()) throw Refused("no b with t^2 + t + b irreducible");
    const auto c = build_quartic(k, QuarticVariant::kUnit, bs.front(), trace_one_element(k));
    j["certificate"] = certificate_json(c);
    ok = c.irreducible;
  } else if (which == "quintic") {
    const auto c = quintic_search(k);
    j["certificate"] = certificate_json(c);
    ok = c.irreducible;
  } else if (which == "sextic") {
    const auto c = sextic_search(k);
    j["certificate"] = certificate_json(c);
    ok = c.irreducible;
  } else if (which == "pattern") {
    const SexticBuild b = [&] {
      try {
        return char2_sextic(k, item);
      } catch (const std::domain_error& e) {
        throw Refused(e.what());
      }
    }();
    j["item"] = item;
    j["G"] = to_string(b.G, "t");
    j["factors"] = polys_json(b.factors);
    j["transcript"] = b.transcript;
    const auto chk = check_sextic(b.G, k, pattern_item(item).degrees);
    j["sextic_conditions"] = chk.ok() ? "ok" : chk.failed();
    ok = chk.ok();
  } else {
    throw std::invalid_argument("--which must be quadratic, cubic, quartic, quintic, sextic or pattern");
  }
  j["checks_passed"] = ok;
  emit(o, j);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lines on smooth cubic surfaces over finite fields and Q"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", out.text, "key: value text output");

  std::string field = "Q", coeffs, poly;
  bool no_solve = false;
  std::vector<std::string> given_lines;
  auto* lines = app.add_subcommand("lines", "Smoothness, rational lines, intersection graph, 27-line solve");
  lines->add_option("--field", field, "Q, GF(q) or GF(p^d,modulus)");
  lines->add_option("--coeffs", coeffs, "20 comma-separated coefficients, descending lex monomial order");
  lines->add_option("--poly", poly, "cubic form in x0..x3");
  lines->add_flag("--no-solve", no_solve, "skip the 27-line solve");
  lines->add_option("--line", given_lines, "over Q: a line as two linear forms 'l1,l2'");

  std::string tmpl, counts;
  bool full = false, setwise = false;
  int threads = 1, script_r = -1, script_j = 0;
  std::string fill = "1";
  std::uint64_t budget = std::uint64_t{1} << 24;
  auto* sweep = app.add_subcommand("sweep", "Histogram of rational-line counts over a coefficient template");
  sweep->add_option("--field", field)->required();
  sweep->add_flag("--full", full, "vary all 20 coefficients");
  sweep->add_option("--template", tmpl, "20 comma-separated entries, '*' varies");
  sweep->add_option("--script-r", script_r, "vary r consecutive slots of the search-script monomial order");
  sweep->add_option("--script-j", script_j, "offset of the varying slots");
  sweep->add_option("--fill", fill, "value of the fixed slots");
  sweep->add_flag("--setwise", setwise, "also count lines set-wise");
  sweep->add_option("--counts", counts, "keep witnesses only for these counts");
  sweep->add_option("--budget", budget, "maximum number of forms");
  sweep->add_option("--threads", threads, "worker threads; results do not depend on it");

  auto* weyl = app.add_subcommand("weyl", "Automorphisms of the 27-line incidence structure");

  std::string pattern, case_tag;
  auto* construct = app.add_subcommand("construct", "Blow-up construction for a Galois pattern");
  construct->add_option("--field", field)->required();
  construct->add_option("--pattern", pattern, "orbit degrees, e.g. 1,1,4")->required();
  construct->add_option("--case", case_tag, "skew or meet (three-line patterns)");

  std::vector<std::string> skew_coeffs;
  auto* skew = app.add_subcommand("skew-triple", "Skew-triple classifier");
  auto* classify_cmd = skew->add_subcommand("classify", "Classify a surface through the standard skew triple");
  skew->require_subcommand(1);
  classify_cmd->add_option("--field", field);
  classify_cmd->add_option("--coeffs", skew_coeffs, "a0201 a0102 a2010 a1020 a0210 a1002 a1101 a0111 a0120 a2001 a1011 a1110")
      ->delimiter(',');
  classify_cmd->add_option("--poly", poly, "cubic form; over F_q a skew triple is located if needed");

  int order = 0;
  bool lemma = false;
  auto* perm = app.add_subcommand("permissible", "Permissible graphs of a given order");
  perm->add_option("--n", order)->required()->check(CLI::Range(1, 7));
  perm->add_flag("--lemma", lemma, "run the exhaustive order-7 triangle check");

  int d = 0, item = 1;
  std::string which;
  auto* irred = app.add_subcommand("irred2", "Irreducible polynomials over F_{2^d}");
  irred->add_option("--d", d)->required()->check(CLI::Range(1, 20));
  irred->add_option("--which", which, "quadratic, cubic, quartic, quintic, sextic or pattern")->required();
  irred->add_option("--item", item, "pattern number 1..11 for --which pattern")->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*lines) {
      const auto fs = parse_field(field);
      if (fs.rational) return lines_rational(out, read_surface(RationalField::instance(), coeffs, poly), given_lines);
      return lines_finite(out, fs.finite, read_surface(*fs.finite, coeffs, poly), !no_solve);
    }
    if (*sweep) {
      const auto fs = parse_field(field);
      if (fs.rational) throw std::invalid_argument("sweeps need a finite field");
      SweepConfig cfg;
      if (full)
        cfg = full_sweep(fs.finite);
      else if (!tmpl.empty())
        cfg = parse_template(fs.finite, tmpl);
      else if (script_r >= 0)
        cfg = script_template(fs.finite, script_r, script_j, parse_element(*fs.finite, fill));
      else
        throw std::invalid_argument("give --full, --template or --script-r");
      cfg.setwise = setwise;
      cfg.threads = threads;
      cfg.budget = budget;
      if (!counts.empty()) {
        const auto v = parse_ints(counts);
        cfg.count_filter = std::set<int>(v.begin(), v.end());
      }
      const auto r = run_sweep(cfg);
      if (out.text)
        std::cout << sweep_text(r);
      else
        std::cout << sweep_json(r) << "\n";
      return r.inadmissible + r.many_without_skew + r.small_not_permissible == 0 ? kOk : kCheckFailed;
    }
    if (*weyl) return cmd_weyl(out);
    if (*construct) return cmd_construct(out, parse_field(field), pattern, case_tag);
    if (*classify_cmd) return cmd_classify(out, parse_field(field), skew_coeffs, poly);
    if (*perm) return cmd_permissible(out, order, lemma);
    if (*irred) return cmd_irred2(out, d, which, item);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const SweepBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefused;
  } catch (const Refused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ExtensionBudgetError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
