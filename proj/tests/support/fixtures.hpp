// SPDX-License-Identifier: Apache-2.0
//
// Small posets used across the test suites.  Each returns a fresh copy.

#pragma once

#include "poset.hpp"

namespace lathom::fixtures {

// 0 < 1 < ... < k-1.
Poset chain_poset(int k);

// k pairwise incomparable elements.
Poset antichain_poset(int k);

// Subset lattice of {1, ..., n} as the ideal lattice of an n-antichain with
// elements labeled "1".."n"; ideal labels look like "{1,3}".
Poset boolean_poset(int n);

// Bottom, three incomparable middles, top (the modular non-distributive
// 5-element lattice).
Poset diamond();

// Bottom, a 2-chain and a single element side by side, top (the
// non-modular 5-element lattice).
Poset pentagon();

// 9-element non-distributive lattice whose simple at the bottom has grade 2
// but projective dimension 3.
Poset gap_lattice();

// 10-element non-distributive lattice with global dimension 2 and order
// dimension 3, separating the two invariants.
Poset dim_split_lattice();

// 7-element bounded poset, not a lattice, whose incidence algebra is
// nevertheless Auslander regular with global dimension 3.  Labels "1".."7".
Poset regular_nonlattice();

// 8-element bounded poset (not a lattice) whose grade bijection is the
// permutation 1>8, 2>5, 3>4, 4>7, 5>6, 6>2, 7>3, 8>1 on labels "1".."8".
Poset grade_bijection_poset();

}  // namespace lathom::fixtures
