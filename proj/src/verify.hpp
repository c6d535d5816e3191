// SPDX-License-Identifier: Apache-2.0
//
// Closed-form homological constructions for lattices (the antichain Koszul
// complex, resolution formulas for injectives and simples, the combinatorial
// Bass-number formula) and a checklist runner that compares them against the
// resolution engine on a given poset, plus an exhaustive sweep over all
// posets of a fixed size.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homology.hpp"
#include "lattice.hpp"

namespace lathom {

struct CheckResult {
  std::string name;
  std::string claim;    // stable slug of the statement being checked
  std::string status;   // "pass", "fail" or "skipped"
  std::string witness;  // counterexample data on fail, context otherwise
  long long millis = 0;
};

struct VerificationReport {
  std::string input_label;
  std::vector<CheckResult> checks;
  bool all_passed() const;  // skipped checks do not count against it
};

struct AugmentedComplex {
  ProjComplex complex;
  ModuleMorphism aug;  // realized degree-0 term -> the resolved module
};

// Complex P_r = (+) { P(join S) : S subset of c, |S| = r } with sign
// (-1)^{#{z in S : z < y}} on the component dropping y, elements of c
// ordered ascending.  Augmented onto the quotient of P(bottom) by the
// submodule generated above c.  Exact for every lattice; minimal for
// distributive ones except the degenerate antichain {bottom}.
AugmentedComplex koszul_complex(const Lattice& l, const Field& f, std::vector<int> antichain);

// Koszul complex over the minimal elements not below x, augmented onto the
// injective at x.
AugmentedComplex closed_form_resolution_injective(const Lattice& l, const Field& f, int x);

// Koszul complex over the covers of x inside the interval [x, top],
// augmented onto the simple at x.
AugmentedComplex closed_form_resolution_simple(const Lattice& l, const Field& f, int x);

// mu^i(x, P(y)) for ideals x, y of p (given as masks): 1 exactly when
// i = |min(complement of x)| and that set lies inside max(y), else 0.
int bass_formula(const Poset& p, std::uint64_t ideal_x, std::uint64_t ideal_y, int degree);

// First exactness defect of an augmented complex (d.d = 0 and gate checks
// included), or nullopt when it resolves aug's target on the nose.
std::optional<std::string> resolution_defect(const ProjComplex& c, const ModuleMorphism& aug);

// The full checklist for one poset: structure classification, then the
// branch fitting it (distributive lattice, other lattice, non-lattice),
// plus the bounded-poset checks.  `budget` caps the linear-extension
// enumeration behind the order-dimension oracle; oracle checks are marked
// skipped when it runs out.
VerificationReport verify_poset(std::shared_ptr<const Poset> p, const Field& f,
                                long budget = 5000);

// verify_poset over the ideal lattice of every poset with exactly n
// elements, and the distributivity/regularity equivalence for every
// enumerated poset that is itself a lattice.
VerificationReport sweep(int n, const Field& f, long budget = 5000);

}  // namespace lathom
