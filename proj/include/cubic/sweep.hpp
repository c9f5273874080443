#ifndef CUBIC_SWEEP_HPP
#define CUBIC_SWEEP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic/cubic_form.hpp"
#include "cubic/finite_field.hpp"

namespace cubic {

// Coefficient template over F_q: fixed entries keep their value, empty
// entries run over the whole field. Positions follow cubic_monomials().
struct SweepConfig {
  FieldPtr field;
  std::array<std::optional<FiniteField::Elem>, 20> tmpl{};
  std::optional<std::set<int>> count_filter;  // witnesses kept only for these counts
  bool setwise = false;                        // also count lines set-wise
  int threads = 1;
  std::uint64_t budget = std::uint64_t{1} << 24;  // maximum number of forms

  int varying() const;
  std::uint64_t size() const;  // q^varying, the zero form included
};

class SweepBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every coefficient varying.
SweepConfig full_sweep(const FieldPtr& k);

// Monomials in the order x0^3, x1^3, x2^3, x3^3, x0^2x1, x0^2x2, x0^2x3,
// x0x1^2, x0x1x2, x0x1x3, x0x2^2, x0x2x3, x0x3^2, x1^2x2, x1^2x3, x1x2^2,
// x1x2x3, x1x3^2, x2^2x3, x2x3^2 (the search-script order).
const std::array<Exps, 20>& script_monomials();

// The first j script slots and the last 20-r-j are `fill`; the r between
// them vary.
SweepConfig script_template(const FieldPtr& k, int r, int j, FiniteField::Elem fill);

// "1,*,a,0,..." with 20 entries in cubic_monomials() order.
SweepConfig parse_template(const FieldPtr& k, const std::string& text);

struct SweepResult {
  std::string field;
  std::uint64_t forms = 0;     // nonzero forms visited
  std::uint64_t smooth = 0;
  std::map<int, std::uint64_t> histogram;  // algebraic rational-line counts of smooth forms
  std::map<int, CubicForm<FiniteField>> witnesses;  // lexicographically least per count

  std::map<int, std::uint64_t> setwise_histogram;
  std::optional<CubicForm<FiniteField>> setwise_witness;  // least with set-wise > algebraic
  int setwise_witness_counts[2] = {0, 0};                // {algebraic, set-wise}

  // Invariant violations; all zero when the theory holds.
  std::uint64_t inadmissible = 0;           // count outside {0,1,2,3,5,7,9,15,27}
  std::uint64_t many_without_skew = 0;      // > 6 lines but no skew triple
  std::uint64_t small_not_permissible = 0;  // <= 6 lines, no skew triple, graph not permissible

  std::set<int> counts() const;
};

SweepResult run_sweep(const SweepConfig& cfg);

std::string sweep_json(const SweepResult& r);
std::string sweep_text(const SweepResult& r);

}  // namespace cubic

#endif  // CUBIC_SWEEP_HPP
