#ifndef CUBIC_WEYL_HPP
#define CUBIC_WEYL_HPP

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cubic/graph.hpp"

namespace cubic {

// Labels of the 27 lines: E1..E6 (0-5), C1..C6 (6-11), L12..L56 (12-26,
// pairs in lex order).
int label_e(int i);
int label_c(int i);
int label_l(int i, int j);
std::string label_name(int v);
int label_from_name(const std::string& s);

// E_i meets C_j iff i != j; E_i and C_i meet L_mn iff i in {m, n};
// L_ij meets L_mn iff the pairs are disjoint.
const Graph& incidence_model();

using Perm27 = std::array<std::uint8_t, 27>;

// Every incidence-preserving permutation of the 27 labels.
const std::vector<Perm27>& automorphism_group();
bool is_automorphism(const Perm27& p);

std::uint32_t fixed_set(const Perm27& p);

// Closure of the element fixed sets under intersection; these are exactly
// the fixed sets of subgroups.
std::set<std::uint32_t> fixed_set_closure();
std::set<int> possible_fixed_counts();

// The two labels adjacent to all four pairwise skew inputs.
std::array<int, 2> transversals_of_four_skew(const std::array<int, 4>& skew);

struct DoubleSix {
  std::array<int, 6> a, b;  // a[i] is skew to b[i] and meets b[j], j != i
};
std::vector<DoubleSix> double_sixes();
// The double six having the skew pair in opposite sextuples.
DoubleSix double_six_of(int l, int m);

// Steiner completion of two disjoint coplanar triples: g[i] = {t1[i], the
// line of t2 meeting it, the third line in their plane}. The columns are
// t1, t2 (reordered) and a third coplanar triple.
using SteinerGrid = std::array<std::array<int, 3>, 3>;
SteinerGrid steiner_complete(const std::array<int, 3>& t1, const std::array<int, 3>& t2);

}  // namespace cubic

#endif  // CUBIC_WEYL_HPP
