// SPDX-License-Identifier: Apache-2.0
//
// Homological invariants of a poset's incidence algebra: minimal projective
// resolutions, Ext against the algebra, injective coresolutions, Bass data,
// dominant dimension, the Gorenstein ladder, and the grade bijection.
//
// Complexes of projectives are stored combinatorially: a list of summand
// vertices per degree, plus scalar matrices.  A map P(s) -> P(t) exists only
// when t <= s, and composition of such maps is plain matrix multiplication,
// so the scalar form carries the entire complex.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modules.hpp"

namespace lathom {

struct ProjComplex {
  std::shared_ptr<const Poset> poset;
  Field field;
  std::vector<std::vector<int>> terms;  // terms[r] = summand vertices of P_r
  std::vector<Mat> diffs;               // diffs[r]: P_{r+1} -> P_r, |terms[r]| x |terms[r+1]|

  int length() const { return static_cast<int>(terms.size()) - 1; }
};

// Entry gates (nonzero (i, j) needs t_i <= s_j), shapes, and d.d = 0.
void validate_complex(const ProjComplex& c);

// Minimal <=> no nonzero entry between equal vertices in any differential.
bool complex_is_minimal(const ProjComplex& c);

// Morphism between realized sums of projectives described by one scalar
// matrix (rows: target summands, cols: source summands).
ModuleMorphism realize_scalar_map(std::shared_ptr<const Poset> p, const Field& f,
                                  const std::vector<int>& src, const std::vector<int>& tgt,
                                  const Mat& scalar);

// The scalar matrix of a morphism between realized sums of projectives,
// read off generator images and checked against the morphism itself.
Mat extract_scalar(const ModuleMorphism& g, const std::vector<int>& src,
                   const std::vector<int>& tgt);

// The r-th differential as an honest morphism between realized terms.
ModuleMorphism realize_diff(const ProjComplex& c, int r);

class IncidenceAlgebra {
public:
  IncidenceAlgebra(std::shared_ptr<const Poset> p, const Field& f);

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const Field& field() const { return field_; }

  // The algebra over the reversed poset (element ids preserved); built once.
  const IncidenceAlgebra& opposite() const;

  PosetModule simple(int x) const { return simple_module(poset_, field_, x); }
  PosetModule projective(int x) const { return projective_module(poset_, field_, x); }
  PosetModule injective(int x) const { return injective_module(poset_, field_, x); }

  ProjComplex minimal_projective_resolution(const PosetModule& m) const;
  const ProjComplex& simple_resolution(int x) const;     // cached
  const ProjComplex& injective_resolution(int x) const;  // cached, resolves injective(x)

  int pdim(const PosetModule& m) const;
  PosetModule syzygy(const PosetModule& m, int k) const;

  // Ext^i(m, A) for i = 0..pdim m, each as a module over the opposite poset.
  std::vector<PosetModule> ext_modules(const PosetModule& m) const;
  const std::vector<PosetModule>& simple_ext(int x) const;  // cached

  // Least i with Ext^i(m, A) != 0; +infinity (nullopt) for the zero module.
  std::optional<int> grade(const PosetModule& m) const;
  int grade_simple(int x) const;

  // Cokernel of the transposed minimal presentation, over the opposite poset.
  PosetModule transpose_module(const PosetModule& m) const;
  // tau_r(m) = D Tr of the (r-1)-th syzygy, r >= 1.
  PosetModule tau(const PosetModule& m, int r) const;

  // Vertex multisets of the minimal injective coresolution (sorted per
  // degree); computed as a projective resolution over the opposite poset.
  std::vector<std::vector<int>> injective_coresolution(const PosetModule& m) const;
  int idim(const PosetModule& m) const;

  // Bass multiplicities mu^i(x, m) indexed [i][x].
  std::vector<std::vector<int>> bass_numbers(const PosetModule& m) const;

private:
  std::shared_ptr<const Poset> poset_;
  Field field_;
  mutable std::unique_ptr<IncidenceAlgebra> op_;
  mutable std::map<int, ProjComplex> simple_res_, inj_res_;
  mutable std::map<int, std::vector<PosetModule>> simple_ext_;
};

struct HomProfile {
  // per element
  std::vector<int> pdim_simple, idim_simple, grade_simple, cograde_simple;
  std::vector<int> pdim_injective, idim_projective;
  int gldim = 0;
  std::optional<int> domdim;            // nullopt: every coresolution term is projective
  std::optional<int> gorenstein_upto;   // first failing degree; nullopt: all degrees pass
  bool auslander_regular = false, auslander_regular_op = false;
  bool diagonal_right = false, diagonal_op = false, diagonal = false;
  // minimal injective coresolution of the algebra, sorted multiset per degree
  std::vector<std::vector<int>> coresolution_terms;
  // [y][i]: sorted term multiset of the coresolution of P(y)
  std::vector<std::vector<std::vector<int>>> projective_coresolutions;
  std::optional<std::vector<int>> grade_bijection;  // x -> top of D Ext^grade(S_x, A)
  std::string grade_bijection_note;                 // why undefined, when it is
};

// Computes the whole table from one algebra (and its opposite); the
// algebra's resolution caches stay warm for the caller.
HomProfile profile(const IncidenceAlgebra& a);
HomProfile profile(std::shared_ptr<const Poset> p, const Field& f);

}  // namespace lathom
