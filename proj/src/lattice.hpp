// SPDX-License-Identifier: Apache-2.0
//
// Finite lattices: join/meet tables on top of a Poset, distributivity,
// forbidden sublattices, the Birkhoff representation, rowmotion.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"

namespace lathom {

struct ForbiddenSublattice {
  std::string kind;              // "diamond" (M3) or "pentagon" (N5)
  std::array<int, 5> elements;   // ascending element ids
};

class Lattice {
public:
  // Throws NotALatticeError naming the first offending pair.
  static Lattice from_poset(const Poset& p);

  const Poset& poset() const { return p_; }
  std::size_t size() const { return p_.size(); }

  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Join of a possibly empty set (empty join is the bottom).
  int join_of(const std::vector<int>& xs) const;
  int meet_of(const std::vector<int>& xs) const;

  bool is_distributive() const;

  // First (in lexicographic subset order) 5-element sublattice isomorphic to
  // the diamond or the pentagon; nullopt iff the lattice is distributive.
  std::optional<ForbiddenSublattice> find_forbidden_sublattice() const;

  // Elements with exactly one lower cover (resp. upper cover), ascending.
  // Cross-checked internally against the definition by joins (resp. meets).
  std::vector<int> join_irreducibles() const;
  std::vector<int> meet_irreducibles() const;

  struct BirkhoffData {
    std::vector<int> j_elements;     // join-irreducibles, ascending
    Poset j;                         // induced subposet on j_elements
    std::vector<std::uint64_t> iso;  // element -> ideal of j (mask over positions)
  };
  // The representation a -> {j join-irreducible : j <= a}.  Verified to be a
  // lattice isomorphism onto the order ideals of j; throws
  // NotDistributiveError when the verification fails.
  BirkhoffData birkhoff() const;

  // Maximal join-irreducibles below a, pruned to an irredundant join
  // decomposition.  Unique for distributive lattices; empty for the bottom.
  std::vector<int> irredundant_join_decomposition(int a) const;

  // Minimal elements of {z : z not<= x} resp. maximal of {z : z not>= y}.
  std::vector<int> min_complement(int x) const;
  std::vector<int> max_complement(int y) const;

  // max_x |covers(x)|; throws NotDistributiveError on other lattices where
  // the count has no dimension meaning.
  int order_dimension_distributive() const;

  // Rowmotion transported along the Birkhoff isomorphism, as a permutation
  // of element ids.  Distributive lattices only.
  std::vector<int> rowmotion_permutation() const;

private:
  explicit Lattice(const Poset& p) : p_(p) {}
  Poset p_;
  std::vector<std::vector<int>> join_, meet_;
  int bottom_ = -1, top_ = -1;
};

// Lattice of order ideals of p, elements in ascending mask order, labeled by
// the member labels of p ("{}", "{a}", "{a,b}", ...).
Lattice ideal_lattice(const Poset& p);

// Mask of the ideal lattice element order used by ideal_lattice.
std::vector<std::uint64_t> ideal_lattice_masks(const Poset& p);

// Rowmotion on order ideals: the ideal generated by the minimal elements of
// the complement.  Throws NotAnIdealError when the mask is not down-closed.
std::uint64_t rowmotion(const Poset& p, std::uint64_t ideal);

}  // namespace lathom
