#include "cubic/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "cubic/graph.hpp"
#include "cubic/groebner.hpp"
#include "cubic/proj_geom.hpp"
#include "cubic/surface.hpp"
#include "cubic/text_format.hpp"
#include "json.hpp"

namespace cubic {

int SweepConfig::varying() const {
  return static_cast<int>(std::count(tmpl.begin(), tmpl.end(), std::nullopt));
}

std::uint64_t SweepConfig::size() const {
  std::uint64_t n = 1;
  for (int i = 0; i < varying(); ++i) {
    if (n > budget / field->order() + 1) return budget + 1;
    n *= field->order();
  }
  return n;
}

SweepConfig full_sweep(const FieldPtr& k) {
  SweepConfig c;
  c.field = k;
  return c;
}

const std::array<Exps, 20>& script_monomials() {
  static const std::array<Exps, 20> m{{{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {2, 1, 0, 0},
                                       {2, 0, 1, 0}, {2, 0, 0, 1}, {1, 2, 0, 0}, {1, 1, 1, 0}, {1, 1, 0, 1},
                                       {1, 0, 2, 0}, {1, 0, 1, 1}, {1, 0, 0, 2}, {0, 2, 1, 0}, {0, 2, 0, 1},
                                       {0, 1, 2, 0}, {0, 1, 1, 1}, {0, 1, 0, 2}, {0, 0, 2, 1}, {0, 0, 1, 2}}};
  return m;
}

SweepConfig script_template(const FieldPtr& k, int r, int j, FiniteField::Elem fill) {
  if (r < 0 || j < 0 || r + j > 20) throw std::invalid_argument("template needs 0 <= r, j and r + j <= 20");
  SweepConfig c;
  c.field = k;
  for (int i = 0; i < 20; ++i) {
    const int pos = cubic_index(script_monomials()[i]);
    if (i >= j && i < j + r)
      c.tmpl[pos] = std::nullopt;
    else
      c.tmpl[pos] = fill;
  }
  return c;
}

SweepConfig parse_template(const FieldPtr& k, const std::string& text) {
  SweepConfig c;
  c.field = k;
  std::stringstream ss(text);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 20) throw std::invalid_argument("template has more than 20 entries");
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item == "*")
      c.tmpl[i] = std::nullopt;
    else
      c.tmpl[i] = parse_element(*k, item);
    ++i;
  }
  if (i != 20) throw std::invalid_argument("template needs 20 entries");
  return c;
}

std::set<int> SweepResult::counts() const {
  std::set<int> s;
  for (const auto& [n, c] : histogram) s.insert(n);
  return s;
}

namespace {

bool has_skew_triple(const FiniteField& k, const std::vector<LineP3<FiniteField>>& L) {
  const std::size_t n = L.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lines_intersect(k, L[i], L[j])) continue;
      for (std::size_t l = j + 1; l < n; ++l)
        if (!lines_intersect(k, L[i], L[l]) && !lines_intersect(k, L[j], L[l])) return true;
    }
  return false;
}

void keep_least(std::map<int, CubicForm<FiniteField>>& w, int n, const CubicForm<FiniteField>& f) {
  auto it = w.find(n);
  if (it == w.end())
    w.emplace(n, f);
  else if (f.c < it->second.c)
    it->second = f;
}

void merge(SweepResult& into, const SweepResult& part) {
  into.forms += part.forms;
  into.smooth += part.smooth;
  for (const auto& [n, c] : part.histogram) into.histogram[n] += c;
  for (const auto& [n, f] : part.witnesses) keep_least(into.witnesses, n, f);
  for (const auto& [n, c] : part.setwise_histogram) into.setwise_histogram[n] += c;
  if (part.setwise_witness && (!into.setwise_witness || part.setwise_witness->c < into.setwise_witness->c)) {
    into.setwise_witness = part.setwise_witness;
    into.setwise_witness_counts[0] = part.setwise_witness_counts[0];
    into.setwise_witness_counts[1] = part.setwise_witness_counts[1];
  }
  into.inadmissible += part.inadmissible;
  into.many_without_skew += part.many_without_skew;
  into.small_not_permissible += part.small_not_permissible;
}

SweepResult sweep_range(const SweepConfig& cfg, const std::vector<int>& vary,
                        const std::vector<LineP3<FiniteField>>& all_lines, std::uint64_t lo, std::uint64_t hi) {
  const FiniteField& k = *cfg.field;
  const std::uint64_t q = k.order();
  SweepResult r;
  auto f = CubicForm<FiniteField>::zero(k);
  for (int i = 0; i < 20; ++i)
    if (cfg.tmpl[i]) f.c[i] = *cfg.tmpl[i];
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t t = idx;
    for (auto it = vary.rbegin(); it != vary.rend(); ++it) {
      f.c[*it] = t % q;
      t /= q;
    }
    if (f.is_zero(k)) continue;
    ++r.forms;
    if (!is_smooth(k, f)) continue;
    ++r.smooth;
    const auto lines = contained_lines(k, f);
    const int n = static_cast<int>(lines.size());
    ++r.histogram[n];
    if (!cfg.count_filter || cfg.count_filter->count(n)) keep_least(r.witnesses, n, f);
    if (!is_admissible_line_count(n)) ++r.inadmissible;
    if (!has_skew_triple(k, lines)) {
      if (n > 6)
        ++r.many_without_skew;
      else if (n > 0 && !is_permissible(intersection_graph(k, lines)))
        ++r.small_not_permissible;
    }
    if (cfg.setwise) {
      int s = 0;
      for (const auto& l : all_lines)
        if (line_in_surface_setwise(k, f, l)) ++s;
      ++r.setwise_histogram[s];
      if (s > n && (!r.setwise_witness || f.c < r.setwise_witness->c)) {
        r.setwise_witness = f;
        r.setwise_witness_counts[0] = n;
        r.setwise_witness_counts[1] = s;
      }
    }
  }
  return r;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  if (!cfg.field) throw std::invalid_argument("sweep needs a field");
  const std::uint64_t total = cfg.size();
  if (total > cfg.budget)
    throw SweepBudgetError("sweep of " + std::to_string(cfg.varying()) + " free coefficients over " +
                           cfg.field->header() + " exceeds the budget of " + std::to_string(cfg.budget) + " forms");
  std::vector<int> vary;
  for (int i = 0; i < 20; ++i)
    if (!cfg.tmpl[i]) vary.push_back(i);
  std::vector<LineP3<FiniteField>> all_lines;
  if (cfg.setwise) all_lines = enumerate_lines_p3(*cfg.field);

  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(std::max<std::uint64_t>(total, 1))));
  std::vector<SweepResult> parts(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
    pool.emplace_back([&, t, lo, hi] { parts[t] = sweep_range(cfg, vary, all_lines, lo, hi); });
  }
  for (auto& th : pool) th.join();
  SweepResult r;
  r.field = cfg.field->header();
  for (const auto& p : parts) merge(r, p);
  return r;
}

std::string sweep_json(const SweepResult& r) {
  nlohmann::json j;
  j["field"] = r.field;
  j["forms"] = r.forms;
  j["smooth"] = r.smooth;
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [n, c] : r.histogram) h[std::to_string(n)] = c;
  j["histogram"] = h;
  j["counts"] = r.counts();
  nlohmann::json w = nlohmann::json::object();
  const FieldPtr k = parse_field(r.field).finite;
  for (const auto& [n, f] : r.witnesses) w[std::to_string(n)] = to_string(*k, f);
  j["witnesses"] = w;
  if (!r.setwise_histogram.empty()) {
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [n, c] : r.setwise_histogram) s[std::to_string(n)] = c;
    j["setwise_histogram"] = s;
    if (r.setwise_witness)
      j["setwise_witness"] = {{"form", to_string(*k, *r.setwise_witness)},
                              {"algebraic", r.setwise_witness_counts[0]},
                              {"setwise", r.setwise_witness_counts[1]}};
  }
  j["violations"] = {{"inadmissible_count", r.inadmissible},
                     {"over_six_without_skew_triple", r.many_without_skew},
                     {"small_graph_not_permissible", r.small_not_permissible}};
  return j.dump(2);
}

std::string sweep_text(const SweepResult& r) {
  std::ostringstream out;
  out << "field " << r.field << ": " << r.forms << " forms, " << r.smooth << " smooth\n";
  const FieldPtr k = parse_field(r.field).finite;
  for (const auto& [n, c] : r.histogram) {
    out << "  " << n << " lines: " << c;
    auto it = r.witnesses.find(n);
    if (it != r.witnesses.end()) out << "  e.g. " << to_string(*k, it->second);
    out << "\n";
  }
  if (r.setwise_witness)
    out << "  set-wise " << r.setwise_witness_counts[1] << " > algebraic " << r.setwise_witness_counts[0] << ": "
        << to_string(*k, *r.setwise_witness) << "\n";
  out << "  violations: " << r.inadmissible << " inadmissible, " << r.many_without_skew
      << " over six without skew triple, " << r.small_not_permissible << " small non-permissible\n";
  return out.str();
}

}  // namespace cubic
