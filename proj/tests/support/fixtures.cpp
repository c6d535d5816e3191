// SPDX-License-Identifier: Apache-2.0

#include "fixtures.hpp"

#include "lattice.hpp"

namespace lathom::fixtures {

Poset chain_poset(int k) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < k; ++i) covers.emplace_back(i, i + 1);
  return Poset::from_covers(k, covers);
}

Poset antichain_poset(int k) { return Poset::from_covers(k, {}); }

Poset boolean_poset(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return ideal_lattice(Poset::from_covers(n, {}, labels)).poset();
}

Poset diamond() {
  return Poset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

Poset pentagon() {
  return Poset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

Poset gap_lattice() {
  return Poset::from_covers(9, {{0, 1},
                                {0, 2},
                                {0, 4},
                                {1, 3},
                                {2, 5},
                                {2, 6},
                                {3, 5},
                                {3, 7},
                                {4, 6},
                                {4, 7},
                                {5, 8},
                                {6, 8},
                                {7, 8}});
}

Poset dim_split_lattice() {
  return Poset::from_covers(10, {{1, 2},
                                 {1, 3},
                                 {1, 7},
                                 {1, 8},
                                 {1, 9},
                                 {2, 0},
                                 {2, 5},
                                 {2, 6},
                                 {3, 0},
                                 {8, 5},
                                 {9, 6},
                                 {0, 4},
                                 {5, 4},
                                 {6, 4},
                                 {7, 4}});
}

Poset regular_nonlattice() {
  return Poset::from_covers(
      7, {{0, 1}, {0, 3}, {1, 2}, {1, 5}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
      {"1", "2", "3", "4", "5", "6", "7"});
}

Poset grade_bijection_poset() {
  return Poset::from_covers(8,
                            {{0, 1},
                             {0, 3},
                             {1, 2},
                             {1, 6},
                             {2, 4},
                             {3, 4},
                             {3, 5},
                             {4, 7},
                             {5, 6},
                             {6, 7}},
                            {"1", "2", "3", "4", "5", "6", "7", "8"});
}

}  // namespace lathom::fixtures
