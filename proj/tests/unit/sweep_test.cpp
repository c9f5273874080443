#include <gtest/gtest.h>

#include "cubic/groebner.hpp"
#include "cubic/surface.hpp"
#include "cubic/sweep.hpp"

namespace cubic {
namespace {

TEST(Sweep, Templates) {
  const auto k = FiniteField::get(2, 2);
  const auto all = script_template(k, 20, 0, 1);
  EXPECT_EQ(all.varying(), 20);
  const auto none = script_template(k, 0, 0, 1);
  EXPECT_EQ(none.varying(), 0);
  EXPECT_EQ(none.size(), 1u);
  // Script slots 4..5 are x0^2x1 and x0^2x2.
  const auto two = script_template(k, 2, 4, 0);
  EXPECT_FALSE(two.tmpl[cubic_index({2, 1, 0, 0})]);
  EXPECT_FALSE(two.tmpl[cubic_index({2, 0, 1, 0})]);
  EXPECT_EQ(*two.tmpl[cubic_index({3, 0, 0, 0})], 0u);
  EXPECT_THROW(script_template(k, 15, 6, 1), std::invalid_argument);

  const auto t = parse_template(k, "1,*,a,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,*");
  EXPECT_EQ(t.varying(), 2);
  EXPECT_EQ(*t.tmpl[2], k->gen());
  EXPECT_THROW(parse_template(k, "1,*"), std::invalid_argument);
  EXPECT_THROW(run_sweep(full_sweep(k)), SweepBudgetError);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto k = FiniteField::get(2, 2);
  auto c = script_template(k, 5, 10, 1);
  c.threads = 1;
  const auto a = sweep_json(run_sweep(c));
  c.threads = 3;
  EXPECT_EQ(sweep_json(run_sweep(c)), a);
}

TEST(Sweep, FourElementFieldTemplatesRealizeEveryCount) {
  const auto k = FiniteField::get(2, 2);
  std::set<int> seen;
  for (auto [j, fill] : std::vector<std::pair<int, std::uint64_t>>{{0, 1}, {10, 1}, {0, 0}}) {
    const auto r = run_sweep(script_template(k, 6, j, fill));
    EXPECT_EQ(r.inadmissible + r.many_without_skew + r.small_not_permissible, 0u);
    for (const auto& [n, f] : r.witnesses) {
      seen.insert(n);
      // Witnesses re-verify through the line enumerator.
      EXPECT_EQ(rational_lines(k, f).lines.size(), static_cast<std::size_t>(n));
    }
  }
  EXPECT_EQ(seen, (std::set<int>{0, 1, 2, 3, 5, 7, 9, 15, 27}));
}

TEST(Sweep, TwoElementSetwiseExcess) {
  const auto k = FiniteField::get(2, 1);
  // x0^2x3 + x0x3^2 + x1^2x2 + x1x2^2 varies with six neighbours.
  SweepConfig c;
  c.field = k;
  for (auto& e : c.tmpl) e = 0;
  for (Exps e : std::vector<Exps>{{2, 0, 0, 1}, {1, 0, 0, 2}, {0, 2, 1, 0}, {0, 1, 2, 0}, {3, 0, 0, 0},
                                  {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}, {1, 1, 1, 0}, {0, 1, 1, 1}})
    c.tmpl[cubic_index(e)] = std::nullopt;
  c.setwise = true;
  const auto r = run_sweep(c);
  ASSERT_TRUE(r.setwise_witness);
  EXPECT_GT(r.setwise_witness_counts[1], r.setwise_witness_counts[0]);
  EXPECT_TRUE(is_smooth(*k, *r.setwise_witness));
  for (int n : r.counts()) EXPECT_TRUE(is_admissible_line_count(n)) << n;
  EXPECT_EQ(r.counts().count(7) + r.counts().count(27), 0u);
}

}  // namespace
}  // namespace cubic
