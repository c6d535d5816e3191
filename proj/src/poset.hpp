// SPDX-License-Identifier: Apache-2.0
//
// Finite posets presented by Hasse diagrams.  Elements are indices 0..n-1
// with optional display labels; subsets travel as 64-bit masks.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lathom {

class Poset {
public:
  // Build from cover pairs [a, b] meaning b covers a.  Redundant comparable
  // pairs are tolerated and reduced away; cycles raise CycleError.  Labels
  // default to decimal indices.
  static Poset from_covers(std::size_t n, const std::vector<std::pair<int, int>>& pairs,
                           std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool less(int a, int b) const { return a != b && leq_[a][b]; }
  bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }

  // Transitive reduction, sorted lexicographically.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int cover_index(int a, int b) const;  // -1 when (a, b) is not a cover
  const std::vector<int>& covers_of(int x) const { return covers_of_[x]; }
  const std::vector<int>& cocovers_of(int x) const { return cocovers_of_[x]; }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& s) const;  // -1 when absent

  Poset opposite() const;

  // Mask utilities; every mask-taking entry point requires n <= 64.
  std::uint64_t down_closure(std::uint64_t s) const;
  std::uint64_t up_closure(std::uint64_t s) const;
  bool is_down_closed(std::uint64_t s) const;
  std::uint64_t minimal_of(std::uint64_t s) const;
  std::uint64_t maximal_of(std::uint64_t s) const;
  std::uint64_t full_mask() const;

  // All order ideals (down-closed subsets) in ascending mask order.
  // Guarded to n <= 20.
  std::vector<std::uint64_t> all_order_ideals() const;

  bool is_bounded(int* bottom = nullptr, int* top = nullptr) const;
  bool is_connected() const;

  // Width (largest antichain) via minimum chain cover, with a witness
  // antichain of exactly that size.
  std::pair<int, std::vector<int>> width_with_witness() const;

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && covers_ == o.covers_ && labels_ == o.labels_;
  }

  // JSON round-trip: {"elements": [...], "covers": [[a, b], ...]}.
  static Poset from_json(const std::string& text);
  std::string to_json() const;

private:
  Poset() = default;

  std::size_t n_ = 0;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> covers_of_, cocovers_of_;
  std::vector<std::string> labels_;
};

// All linear extensions in lexicographic order; BudgetError once more than
// `budget` would be produced.
std::vector<std::vector<int>> linear_extensions(const Poset& p, long budget);

struct OrderDimResult {
  std::optional<int> dim;                   // nullopt: exceeds t_max
  std::vector<std::vector<int>> realizer;   // dim extensions whose intersection is p
};

// Smallest t <= t_max such that t linear extensions intersect to exactly the
// order of p.  Exhaustive per candidate t; intended for small posets.
OrderDimResult order_dimension_oracle(const Poset& p, int t_max = 4, long budget = 5000);

// All posets on exactly n elements up to isomorphism (n <= 6), each in its
// canonical labeling, listed in a deterministic order.
std::vector<Poset> enumerate_posets(int n);

// Canonical isomorphism key; only for n <= 8 (enumerates permutations).
std::uint64_t canonical_key(const Poset& p);

}  // namespace lathom
