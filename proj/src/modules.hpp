// SPDX-License-Identifier: Apache-2.0
//
// Representations of a poset over a field: one vector space per element, one
// map per cover, path independence across the Hasse diagram.  These are the
// same thing as modules over the poset's incidence algebra.

#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "poset.hpp"

namespace lathom {

struct PosetModule {
  std::shared_ptr<const Poset> poset;
  Field field;
  std::vector<int> dims;    // per element
  std::vector<Mat> edges;   // per cover (a, b): a map of shape dims[b] x dims[a]

  PosetModule(std::shared_ptr<const Poset> p, const Field& f);

  const Mat& edge(int a, int b) const;  // (a, b) must be a cover
  bool is_zero() const;
  int total_dim() const;
};

struct ModuleMorphism {
  PosetModule source, target;
  std::vector<Mat> maps;  // per element: dims_target[v] x dims_source[v]
};

bool modules_equal(const PosetModule& a, const PosetModule& b);

// Shape checks plus path independence: the canonical composite map along a
// fixed chain from x to each y >= x must match every single-cover extension.
// Complete because every path composite reduces to the canonical one.
void validate_module(const PosetModule& m);

// Composite of edge maps along the canonical chain from x to y (x <= y).
Mat transitive_map(const PosetModule& m, int x, int y);

void validate_morphism(const ModuleMorphism& f);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

PosetModule zero_module(std::shared_ptr<const Poset> p, const Field& f);
PosetModule simple_module(std::shared_ptr<const Poset> p, const Field& f, int x);
// Row space of the idempotent at x: one-dimensional on the up-set of x.
PosetModule projective_module(std::shared_ptr<const Poset> p, const Field& f, int x);
// Dual of the opposite projective: one-dimensional on the down-set of x.
PosetModule injective_module(std::shared_ptr<const Poset> p, const Field& f, int x);

PosetModule direct_sum(const std::vector<PosetModule>& parts);

// Multiplicity of each simple in m / rad m resp. soc m.
std::vector<int> top_multiplicities(const PosetModule& m);
std::vector<int> socle_multiplicities(const PosetModule& m);

// (rad m, inclusion): at each vertex the joint image of the incoming edges.
std::pair<PosetModule, ModuleMorphism> radical_submodule(const PosetModule& m);

// Projective cover: summand vertices (ascending, with multiplicity) and the
// epimorphism onto m.  The kernel lands in the radical by construction.
std::pair<std::vector<int>, ModuleMorphism> projective_cover(const PosetModule& m);

std::pair<PosetModule, ModuleMorphism> kernel_of(const ModuleMorphism& f);     // (ker, inclusion)
std::pair<PosetModule, ModuleMorphism> cokernel_of(const ModuleMorphism& f);   // (coker, projection)

// K-linear dual as a module over the opposite poset (edge maps transpose).
PosetModule dual_module(const PosetModule& m, std::shared_ptr<const Poset> opposite);

// For a bounded poset with bottom m and an antichain c: the submodule of
// P(m) supported on elements above some member of c, with its inclusion.
std::pair<PosetModule, ModuleMorphism> antichain_submodule(std::shared_ptr<const Poset> p,
                                                           const Field& f,
                                                           const std::vector<int>& antichain);
// The quotient P(m) / antichain_submodule: supported where c stays away.
PosetModule antichain_quotient(std::shared_ptr<const Poset> p, const Field& f,
                               const std::vector<int>& antichain);

// Summand vertices when m is projective, nullopt otherwise.
std::optional<std::vector<int>> decompose_projective(const PosetModule& m);

// Sum of one-dimensional projectives realized concretely: at vertex v the
// fiber has one coordinate per summand s <= v, in summand order.
PosetModule realize_projectives(std::shared_ptr<const Poset> p, const Field& f,
                                const std::vector<int>& summands);

}  // namespace lathom
