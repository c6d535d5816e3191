// SPDX-License-Identifier: Apache-2.0

#include "homology.hpp"

#include <algorithm>

#include "errors.hpp"

namespace lathom {

void validate_complex(const ProjComplex& c) {
  if (c.terms.empty()) throw InternalError("complex has no terms");
  if (c.diffs.size() + 1 != c.terms.size())
    throw InternalError("complex has " + std::to_string(c.terms.size()) + " terms but " +
                        std::to_string(c.diffs.size()) + " differentials");
  const Poset& p = *c.poset;
  for (std::size_t r = 0; r < c.diffs.size(); ++r) {
    const Mat& d = c.diffs[r];
    if (d.rows() != c.terms[r].size() || d.cols() != c.terms[r + 1].size())
      throw InternalError("differential " + std::to_string(r) + " has wrong shape");
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!c.field.is_zero(d.at(i, j)) && !p.leq(c.terms[r][i], c.terms[r + 1][j]))
          throw SupportError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") of differential " + std::to_string(r) +
                             " violates the support condition");
  }
  for (size_t r = 0; r + 1 < c.diffs.size(); ++r)
    if (!(c.diffs[r] * c.diffs[r + 1]).is_zero())
      throw InternalError("d.d != 0 at degree " + std::to_string(r + 1));
}

bool complex_is_minimal(const ProjComplex& c) {
  for (std::size_t r = 0; r < c.diffs.size(); ++r) {
    const Mat& d = c.diffs[r];
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!c.field.is_zero(d.at(i, j)) && c.terms[r][i] == c.terms[r + 1][j]) return false;
  }
  return true;
}

ModuleMorphism realize_scalar_map(std::shared_ptr<const Poset> p, const Field& f,
                                  const std::vector<int>& src, const std::vector<int>& tgt,
                                  const Mat& scalar) {
  if (scalar.rows() != tgt.size() || scalar.cols() != src.size())
    throw InternalError("scalar matrix shape does not match summand lists");
  for (std::size_t i = 0; i < tgt.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (!f.is_zero(scalar.at(i, j)) && !p->leq(tgt[i], src[j]))
        throw SupportError("scalar map has a nonzero entry outside the allowed support");

  ModuleMorphism g{realize_projectives(p, f, src), realize_projectives(p, f, tgt), {}};
  const int n = static_cast<int>(p->size());
  g.maps.reserve(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < tgt.size(); ++i)
      if (p->leq(tgt[i], v)) rows.push_back(i);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (p->leq(src[j], v)) cols.push_back(j);
    Mat m(f, rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) m.set(a, b, scalar.at(rows[a], cols[b]));
    g.maps.push_back(std::move(m));
  }
  return g;
}

Mat extract_scalar(const ModuleMorphism& g, const std::vector<int>& src,
                   const std::vector<int>& tgt) {
  const auto& p = g.source.poset;
  const Field& f = g.source.field;
  Mat scalar(f, tgt.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    int v = src[j];
    std::size_t col = 0;  // fiber position of summand j at its own vertex
    for (std::size_t j2 = 0; j2 < j; ++j2)
      if (p->leq(src[j2], v)) ++col;
    std::size_t row = 0;
    for (std::size_t i = 0; i < tgt.size(); ++i) {
      if (!p->leq(tgt[i], v)) continue;
      scalar.set(i, j, g.maps[v].at(row, col));
      ++row;
    }
  }
  // A map between sums of projectives is determined by generator images; if
  // re-realizing the extracted matrix does not reproduce the map, the input
  // was not such a morphism and the caller has a bug.
  ModuleMorphism check = realize_scalar_map(p, f, src, tgt, scalar);
  for (std::size_t v = 0; v < p->size(); ++v)
    if (!(check.maps[v] == g.maps[v]))
      throw InternalError("morphism is not determined by generator images at vertex " +
                          p->label(static_cast<int>(v)));
  return scalar;
}

ModuleMorphism realize_diff(const ProjComplex& c, int r) {
  if (r < 0 || r >= static_cast<int>(c.diffs.size()))
    throw InternalError("differential index out of range");
  return realize_scalar_map(c.poset, c.field, c.terms[r + 1], c.terms[r], c.diffs[r]);
}

IncidenceAlgebra::IncidenceAlgebra(std::shared_ptr<const Poset> p, const Field& f)
    : poset_(std::move(p)), field_(f) {
  if (!poset_ || poset_->size() == 0) throw SemanticError("incidence algebra needs a nonempty poset");
}

const IncidenceAlgebra& IncidenceAlgebra::opposite() const {
  if (!op_)
    op_ = std::unique_ptr<IncidenceAlgebra>(
        new IncidenceAlgebra(std::make_shared<Poset>(poset_->opposite()), field_));
  return *op_;
}

ProjComplex IncidenceAlgebra::minimal_projective_resolution(const PosetModule& m) const {
  ProjComplex res{poset_, field_, {}, {}};
  auto [summands, epi] = projective_cover(m);
  res.terms.push_back(summands);
  auto [ker, incl] = kernel_of(epi);
  PosetModule cur = std::move(ker);
  ModuleMorphism into_prev = std::move(incl);  // cur -> realization of res.terms.back()
  while (!cur.is_zero()) {
    if (res.terms.size() > poset_->size() + 1)
      throw InternalError("projective resolution did not terminate");
    auto [next_summands, next_epi] = projective_cover(cur);
    ModuleMorphism composite = compose(into_prev, next_epi);
    res.diffs.push_back(extract_scalar(composite, next_summands, res.terms.back()));
    res.terms.push_back(next_summands);
    auto [next_ker, next_incl] = kernel_of(next_epi);
    cur = std::move(next_ker);
    into_prev = std::move(next_incl);
  }
  return res;
}

const ProjComplex& IncidenceAlgebra::simple_resolution(int x) const {
  auto it = simple_res_.find(x);
  if (it == simple_res_.end())
    it = simple_res_.emplace(x, minimal_projective_resolution(simple(x))).first;
  return it->second;
}

const ProjComplex& IncidenceAlgebra::injective_resolution(int x) const {
  auto it = inj_res_.find(x);
  if (it == inj_res_.end())
    it = inj_res_.emplace(x, minimal_projective_resolution(injective(x))).first;
  return it->second;
}

int IncidenceAlgebra::pdim(const PosetModule& m) const {
  return minimal_projective_resolution(m).length();
}

PosetModule IncidenceAlgebra::syzygy(const PosetModule& m, int k) const {
  if (k < 0) throw InternalError("negative syzygy index");
  PosetModule cur = m;
  for (int step = 0; step < k; ++step) {
    auto [summands, epi] = projective_cover(cur);
    (void)summands;
    cur = kernel_of(epi).first;
  }
  return cur;
}

namespace {

// Ext^i(M, A) for the module resolved by res, as modules over the opposite
// poset.  Hom(P(s), A) is the opposite-side projective at s, so the
// transposed differentials form a cochain complex of projectives there.
std::vector<PosetModule> ext_from_resolution(const IncidenceAlgebra& a, const ProjComplex& res) {
  auto op = a.opposite().poset_ptr();
  const Field& f = a.field();
  int len = res.length();
  std::vector<PosetModule> realized;
  realized.reserve(len + 1);
  for (const auto& t : res.terms) realized.push_back(realize_projectives(op, f, t));
  std::vector<ModuleMorphism> delta;
  delta.reserve(len);
  for (int i = 0; i < len; ++i)
    delta.push_back(realize_scalar_map(op, f, res.terms[i], res.terms[i + 1],
                                       res.diffs[i].transpose()));

  std::vector<PosetModule> ext;
  ext.reserve(len + 1);
  for (int i = 0; i <= len; ++i) {
    if (len == 0) {
      ext.push_back(realized[0]);
      break;
    }
    if (i == 0) {
      ext.push_back(kernel_of(delta[0]).first);
      continue;
    }
    if (i == len) {
      ext.push_back(cokernel_of(delta[len - 1]).first);
      continue;
    }
    auto [cycles, incl] = kernel_of(delta[i]);
    // delta_{i-1} lands in the cycles; factor it through the inclusion.
    ModuleMorphism g{realized[i - 1], cycles, {}};
    for (std::size_t v = 0; v < op->size(); ++v) {
      auto x = solve(incl.maps[v], delta[i - 1].maps[v]);
      if (!x) throw InternalError("coboundary does not land in the cocycles");
      g.maps.push_back(std::move(*x));
    }
    ext.push_back(cokernel_of(g).first);
  }
  return ext;
}

}  // namespace

std::vector<PosetModule> IncidenceAlgebra::ext_modules(const PosetModule& m) const {
  return ext_from_resolution(*this, minimal_projective_resolution(m));
}

const std::vector<PosetModule>& IncidenceAlgebra::simple_ext(int x) const {
  auto it = simple_ext_.find(x);
  if (it == simple_ext_.end())
    it = simple_ext_.emplace(x, ext_from_resolution(*this, simple_resolution(x))).first;
  return it->second;
}

std::optional<int> IncidenceAlgebra::grade(const PosetModule& m) const {
  if (m.is_zero()) return std::nullopt;
  auto ext = ext_modules(m);
  for (size_t i = 0; i < ext.size(); ++i)
    if (!ext[i].is_zero()) return static_cast<int>(i);
  throw InternalError("nonzero module with no nonzero Ext against the algebra");
}

int IncidenceAlgebra::grade_simple(int x) const {
  const auto& ext = simple_ext(x);
  for (size_t i = 0; i < ext.size(); ++i)
    if (!ext[i].is_zero()) return static_cast<int>(i);
  throw InternalError("simple module with no nonzero Ext against the algebra");
}

PosetModule IncidenceAlgebra::transpose_module(const PosetModule& m) const {
  ProjComplex res = minimal_projective_resolution(m);
  auto op = opposite().poset_ptr();
  if (res.length() == 0) return PosetModule(op, field_);  // projectives have zero transpose
  ModuleMorphism delta0 = realize_scalar_map(op, field_, res.terms[0], res.terms[1],
                                             res.diffs[0].transpose());
  return cokernel_of(delta0).first;
}

PosetModule IncidenceAlgebra::tau(const PosetModule& m, int r) const {
  if (r < 1) throw InternalError("tau needs a positive degree");
  PosetModule omega = syzygy(m, r - 1);
  PosetModule tr = transpose_module(omega);
  return dual_module(tr, poset_);
}

std::vector<std::vector<int>> IncidenceAlgebra::injective_coresolution(const PosetModule& m) const {
  PosetModule d = dual_module(m, opposite().poset_ptr());
  return opposite().minimal_projective_resolution(d).terms;
}

int IncidenceAlgebra::idim(const PosetModule& m) const {
  return static_cast<int>(injective_coresolution(m).size()) - 1;
}

std::vector<std::vector<int>> IncidenceAlgebra::bass_numbers(const PosetModule& m) const {
  auto cores = injective_coresolution(m);
  std::vector<std::vector<int>> mu(cores.size(), std::vector<int>(poset_->size(), 0));
  for (size_t i = 0; i < cores.size(); ++i)
    for (int x : cores[i]) ++mu[i][x];
  return mu;
}

namespace {

std::vector<int> sorted_copy(const std::vector<int>& v) {
  std::vector<int> out = v;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HomProfile profile(std::shared_ptr<const Poset> p, const Field& f) {
  return profile(IncidenceAlgebra(std::move(p), f));
}

HomProfile profile(const IncidenceAlgebra& a) {
  const auto& p = a.poset_ptr();
  const IncidenceAlgebra& b = a.opposite();
  const int n = static_cast<int>(p->size());

  HomProfile h;
  h.pdim_simple.resize(n);
  h.idim_simple.resize(n);
  h.grade_simple.resize(n);
  h.cograde_simple.resize(n);
  h.pdim_injective.resize(n);
  h.idim_projective.resize(n);
  for (int x = 0; x < n; ++x) {
    h.pdim_simple[x] = a.simple_resolution(x).length();
    h.idim_simple[x] = b.simple_resolution(x).length();
    h.grade_simple[x] = a.grade_simple(x);
    h.cograde_simple[x] = b.grade_simple(x);
    h.pdim_injective[x] = a.injective_resolution(x).length();
    h.idim_projective[x] = b.injective_resolution(x).length();
  }
  h.gldim = *std::max_element(h.pdim_simple.begin(), h.pdim_simple.end());

  // Coresolution of each projective: dualize and resolve on the other side.
  h.projective_coresolutions.resize(n);
  int idim_a = 0;
  for (int y = 0; y < n; ++y) {
    for (const auto& t : b.injective_resolution(y).terms)
      h.projective_coresolutions[y].push_back(sorted_copy(t));
    idim_a = std::max(idim_a, static_cast<int>(h.projective_coresolutions[y].size()) - 1);
  }
  h.coresolution_terms.assign(idim_a + 1, {});
  for (int y = 0; y < n; ++y)
    for (size_t i = 0; i < h.projective_coresolutions[y].size(); ++i)
      for (int x : h.projective_coresolutions[y][i]) h.coresolution_terms[i].push_back(x);
  for (auto& t : h.coresolution_terms) std::sort(t.begin(), t.end());

  // Dominant dimension: first coresolution degree with a non-projective term.
  h.domdim = std::nullopt;
  for (int i = 0; i <= idim_a && !h.domdim; ++i)
    for (int x : h.coresolution_terms[i])
      if (h.pdim_injective[x] > 0) {
        h.domdim = i;
        break;
      }

  // Gorenstein ladder on the right: pdim of every term of the i-th
  // coresolution degree of the algebra stays <= i, and the diagonal variant
  // asks for equality.
  h.gorenstein_upto = std::nullopt;
  h.diagonal_right = true;
  for (int i = 0; i <= idim_a; ++i) {
    for (int x : h.coresolution_terms[i]) {
      if (h.pdim_injective[x] > i && !h.gorenstein_upto) h.gorenstein_upto = i;
      if (h.pdim_injective[x] != i) h.diagonal_right = false;
    }
  }
  h.auslander_regular = !h.gorenstein_upto.has_value();

  // Same ladder for the opposite algebra, assembled from the caches already
  // in hand: coresolving an opposite-side projective resolves the matching
  // injective back on this side, and pdim of an opposite-side injective is
  // the idim of the matching projective here.
  int idim_b = 0;
  std::vector<std::vector<std::vector<int>>> op_cores(n);
  for (int y = 0; y < n; ++y) {
    for (const auto& t : a.injective_resolution(y).terms) op_cores[y].push_back(sorted_copy(t));
    idim_b = std::max(idim_b, static_cast<int>(op_cores[y].size()) - 1);
  }
  std::optional<int> op_upto;
  h.diagonal_op = true;
  for (int i = 0; i <= idim_b; ++i)
    for (int y = 0; y < n; ++y) {
      if (i >= static_cast<int>(op_cores[y].size())) continue;
      for (int x : op_cores[y][i]) {
        if (h.idim_projective[x] > i && !op_upto) op_upto = i;
        if (h.idim_projective[x] != i) h.diagonal_op = false;
      }
    }
  h.auslander_regular_op = !op_upto.has_value();
  h.diagonal = h.diagonal_right && h.diagonal_op;

  // Grade bijection: x goes to the top of D Ext^g(S_x, A), g the grade,
  // whenever that dual is local with simple top and the images permute.
  std::vector<int> image(n, -1);
  std::string note;
  for (int x = 0; x < n; ++x) {
    int g = h.grade_simple[x];
    PosetModule de = dual_module(a.simple_ext(x)[g], p);
    auto tops = top_multiplicities(de);
    int y = -1, total = 0;
    for (int c = 0; c < n; ++c) {
      total += tops[c];
      if (tops[c] > 0) y = c;
    }
    if (total == 1)
      image[x] = y;
    else
      note += "top of the dualized degree-" + std::to_string(g) + " Ext of the simple at " +
              p->label(x) + " has dimension " + std::to_string(total) + "; ";
  }
  bool defined = std::all_of(image.begin(), image.end(), [](int v) { return v >= 0; });
  if (defined) {
    std::vector<int> seen(n, 0);
    for (int v : image) ++seen[v];
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
      defined = false;
      note += "images do not form a permutation; ";
    }
  }
  if (defined) {
    h.grade_bijection = image;
  } else {
    if (note.size() >= 2) note.erase(note.size() - 2);  // trailing "; "
    h.grade_bijection_note = note.empty() ? "undefined" : note;
  }
  return h;
}

}  // namespace lathom
