// SPDX-License-Identifier: Apache-2.0

#include "modules.hpp"

#include <algorithm>

namespace lathom {

PosetModule::PosetModule(std::shared_ptr<const Poset> p, const Field& f)
    : poset(std::move(p)), field(f), dims(poset->size(), 0) {
  edges.assign(poset->covers().size(), Mat(f, 0, 0));
}

int PosetModule::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

const Mat& PosetModule::edge(int a, int b) const {
  const int k = poset->cover_index(a, b);
  if (k < 0) throw InternalError("edge lookup on a non-cover pair");
  return edges[k];
}

bool PosetModule::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

bool modules_equal(const PosetModule& a, const PosetModule& b) {
  return *a.poset == *b.poset && a.field == b.field && a.dims == b.dims && a.edges == b.edges;
}

Mat transitive_map(const PosetModule& m, int x, int y) {
  const Poset& p = *m.poset;
  if (!p.leq(x, y)) throw InternalError("transitive map needs x <= y");
  Mat t = Mat::identity(m.field, m.dims[x]);
  int v = x;
  while (v != y) {
    int next = -1;
    for (int w : p.covers_of(v))
      if (p.leq(w, y)) {
        next = w;
        break;
      }
    if (next == -1) throw InternalError("no chain step toward target");
    t = m.edge(v, next) * t;
    v = next;
  }
  return t;
}

void validate_module(const PosetModule& m) {
  const Poset& p = *m.poset;
  if (m.dims.size() != p.size() || m.edges.size() != p.covers().size())
    throw SemanticError("module shape does not match the poset");
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    if (m.edges[k].rows() != static_cast<std::size_t>(m.dims[b]) ||
        m.edges[k].cols() != static_cast<std::size_t>(m.dims[a]))
      throw SemanticError("edge map for cover (" + p.label(a) + ", " + p.label(b) +
                          ") has the wrong shape");
    if (m.edges[k].field() != m.field) throw SemanticError("edge map over the wrong field");
  }
  const int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      if (!p.leq(x, a)) continue;
      const Mat txa = transitive_map(m, x, a);
      for (int b : p.covers_of(a))
        if (!(m.edge(a, b) * txa == transitive_map(m, x, b)))
          throw PathIndependenceError("path composites from " + p.label(x) + " to " +
                                      p.label(b) + " disagree");
    }
}

void validate_morphism(const ModuleMorphism& f) {
  const Poset& p = *f.source.poset;
  if (!(*f.target.poset == p)) throw SemanticError("morphism endpoints over different posets");
  if (f.maps.size() != p.size()) throw SemanticError("morphism map count mismatch");
  for (std::size_t v = 0; v < p.size(); ++v)
    if (f.maps[v].rows() != static_cast<std::size_t>(f.target.dims[v]) ||
        f.maps[v].cols() != static_cast<std::size_t>(f.source.dims[v]))
      throw SemanticError("morphism map at " + p.label(static_cast<int>(v)) +
                          " has the wrong shape");
  for (auto [a, b] : p.covers())
    if (!(f.target.edge(a, b) * f.maps[a] == f.maps[b] * f.source.edge(a, b)))
      throw SemanticError("morphism is not natural across cover (" + p.label(a) + ", " +
                          p.label(b) + ")");
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
  return h;
}

PosetModule zero_module(std::shared_ptr<const Poset> p, const Field& f) {
  return PosetModule(std::move(p), f);
}

namespace {

// 1-dimensional on `support`, identity edges inside it.
PosetModule thin_module(std::shared_ptr<const Poset> p, const Field& f,
                        const std::vector<bool>& support) {
  PosetModule m(p, f);
  for (std::size_t v = 0; v < p->size(); ++v) m.dims[v] = support[v] ? 1 : 0;
  for (std::size_t k = 0; k < p->covers().size(); ++k) {
    auto [a, b] = p->covers()[k];
    m.edges[k] = Mat(f, m.dims[b], m.dims[a]);
    if (support[a] && support[b]) m.edges[k].set(0, 0, f.one());
  }
  return m;
}

}  // namespace

PosetModule simple_module(std::shared_ptr<const Poset> p, const Field& f, int x) {
  std::vector<bool> s(p->size(), false);
  s[x] = true;
  return thin_module(std::move(p), f, s);
}

PosetModule projective_module(std::shared_ptr<const Poset> p, const Field& f, int x) {
  std::vector<bool> s(p->size(), false);
  for (std::size_t v = 0; v < p->size(); ++v) s[v] = p->leq(x, static_cast<int>(v));
  return thin_module(std::move(p), f, s);
}

PosetModule injective_module(std::shared_ptr<const Poset> p, const Field& f, int x) {
  std::vector<bool> s(p->size(), false);
  for (std::size_t v = 0; v < p->size(); ++v) s[v] = p->leq(static_cast<int>(v), x);
  return thin_module(std::move(p), f, s);
}

PosetModule direct_sum(const std::vector<PosetModule>& parts) {
  if (parts.empty()) throw InternalError("direct sum of nothing (poset unknown)");
  PosetModule m(parts[0].poset, parts[0].field);
  for (const PosetModule& q : parts) {
    if (!(*q.poset == *m.poset) || q.field != m.field)
      throw SemanticError("direct sum over mismatched posets or fields");
    for (std::size_t v = 0; v < m.dims.size(); ++v) m.dims[v] += q.dims[v];
  }
  for (std::size_t k = 0; k < m.edges.size(); ++k) {
    auto [a, b] = m.poset->covers()[k];
    Mat block(m.field, m.dims[b], m.dims[a]);
    std::size_t ro = 0, co = 0;
    for (const PosetModule& q : parts) {
      const Mat& e = q.edges[k];
      for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) block.set(ro + i, co + j, e.at(i, j));
      ro += e.rows();
      co += e.cols();
    }
    m.edges[k] = block;
  }
  return m;
}

namespace {

// Horizontal stack of the incoming edge maps at y; its column space is the
// fiber of rad m.
Mat incoming_stack(const PosetModule& m, int y) {
  const Poset& p = *m.poset;
  std::size_t cols = 0;
  for (int a : p.cocovers_of(y)) cols += m.dims[a];
  Mat s(m.field, m.dims[y], cols);
  std::size_t off = 0;
  for (int a : p.cocovers_of(y)) {
    const Mat& e = m.edge(a, y);
    for (std::size_t i = 0; i < e.rows(); ++i)
      for (std::size_t j = 0; j < e.cols(); ++j) s.set(i, off + j, e.at(i, j));
    off += e.cols();
  }
  return s;
}

// Canonical basis of the column space of s, as columns.
Mat column_space_basis(const Mat& s) {
  RrefResult r = rref(s.transpose());
  Mat basis(s.field(), s.rows(), r.rank);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < s.rows(); ++j) basis.set(j, i, r.reduced.at(i, j));
  return basis;
}

}  // namespace

std::vector<int> top_multiplicities(const PosetModule& m) {
  std::vector<int> t(m.poset->size());
  for (std::size_t y = 0; y < t.size(); ++y)
    t[y] = m.dims[y] - static_cast<int>(rank(incoming_stack(m, static_cast<int>(y))));
  return t;
}

std::vector<int> socle_multiplicities(const PosetModule& m) {
  const Poset& p = *m.poset;
  std::vector<int> s(p.size());
  for (std::size_t y = 0; y < p.size(); ++y) {
    std::size_t rows = 0;
    for (int b : p.covers_of(static_cast<int>(y))) rows += m.dims[b];
    Mat stack(m.field, rows, m.dims[y]);
    std::size_t off = 0;
    for (int b : p.covers_of(static_cast<int>(y))) {
      const Mat& e = m.edge(static_cast<int>(y), b);
      for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) stack.set(off + i, j, e.at(i, j));
      off += e.rows();
    }
    s[y] = m.dims[y] - static_cast<int>(rank(stack));
  }
  return s;
}

namespace {

// Submodule from a family of fiber bases given as independent columns.
std::pair<PosetModule, ModuleMorphism> submodule_from_bases(const PosetModule& m,
                                                            std::vector<Mat> bases) {
  const Poset& p = *m.poset;
  PosetModule sub(m.poset, m.field);
  for (std::size_t v = 0; v < p.size(); ++v) sub.dims[v] = static_cast<int>(bases[v].cols());
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    auto x = solve(bases[b], m.edges[k] * bases[a]);
    if (!x) throw InternalError("edge map does not preserve the submodule");
    sub.edges[k] = *x;
  }
  ModuleMorphism incl{sub, m, std::move(bases)};
  return {std::move(sub), std::move(incl)};
}

}  // namespace

std::pair<PosetModule, ModuleMorphism> radical_submodule(const PosetModule& m) {
  std::vector<Mat> bases;
  for (std::size_t y = 0; y < m.poset->size(); ++y)
    bases.push_back(column_space_basis(incoming_stack(m, static_cast<int>(y))));
  return submodule_from_bases(m, std::move(bases));
}

PosetModule realize_projectives(std::shared_ptr<const Poset> p, const Field& f,
                                const std::vector<int>& summands) {
  PosetModule m(p, f);
  for (std::size_t v = 0; v < p->size(); ++v) {
    int d = 0;
    for (int s : summands)
      if (p->leq(s, static_cast<int>(v))) ++d;
    m.dims[v] = d;
  }
  for (std::size_t k = 0; k < p->covers().size(); ++k) {
    auto [a, b] = p->covers()[k];
    Mat e(f, m.dims[b], m.dims[a]);
    int col = 0;
    for (std::size_t j = 0; j < summands.size(); ++j) {
      if (!p->leq(summands[j], a)) continue;
      int row = 0;
      for (std::size_t i = 0; i < summands.size(); ++i) {
        if (!p->leq(summands[i], b)) continue;
        if (i == j) e.set(row, col, f.one());
        ++row;
      }
      ++col;
    }
    m.edges[k] = e;
  }
  return m;
}

std::pair<std::vector<int>, ModuleMorphism> projective_cover(const PosetModule& m) {
  const Poset& p = *m.poset;
  const Field& f = m.field;
  const std::size_t n = p.size();

  // standard basis vectors lifting a basis of the top at each vertex
  std::vector<std::vector<int>> lifts(n);
  std::vector<int> summands;
  for (std::size_t y = 0; y < n; ++y) {
    Mat span = column_space_basis(incoming_stack(m, static_cast<int>(y)));
    std::size_t cur = span.cols();
    for (int k = 0; k < m.dims[y] && cur < static_cast<std::size_t>(m.dims[y]); ++k) {
      Mat unit(f, m.dims[y], 1);
      unit.set(k, 0, f.one());
      Mat extended = span.augment(unit);
      if (rank(extended) > cur) {
        span = std::move(extended);
        ++cur;
        lifts[y].push_back(k);
        summands.push_back(static_cast<int>(y));
      }
    }
  }
  std::sort(summands.begin(), summands.end());

  PosetModule cover = realize_projectives(m.poset, f, summands);
  ModuleMorphism epi{cover, m, {}};
  for (std::size_t v = 0; v < n; ++v) {
    Mat map(f, m.dims[v], cover.dims[v]);
    int col = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.leq(static_cast<int>(y), static_cast<int>(v))) continue;
      Mat t = transitive_map(m, static_cast<int>(y), static_cast<int>(v));
      for (int k : lifts[y]) {
        for (std::size_t i = 0; i < map.rows(); ++i) map.set(i, col, t.at(i, k));
        ++col;
      }
    }
    epi.maps.push_back(std::move(map));
  }
  return {std::move(summands), std::move(epi)};
}

std::pair<PosetModule, ModuleMorphism> kernel_of(const ModuleMorphism& g) {
  std::vector<Mat> bases;
  for (const Mat& map : g.maps) bases.push_back(kernel_basis(map));
  return submodule_from_bases(g.source, std::move(bases));
}

std::pair<PosetModule, ModuleMorphism> cokernel_of(const ModuleMorphism& g) {
  const PosetModule& t = g.target;
  const Poset& p = *t.poset;
  const Field& f = t.field;
  const std::size_t n = p.size();

  std::vector<Mat> proj, section;
  for (std::size_t v = 0; v < n; ++v) {
    RrefResult r = rref(g.maps[v].transpose());  // reduced rows: basis of the image
    std::vector<bool> is_pivot(t.dims[v], false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<int> free;
    for (int c = 0; c < t.dims[v]; ++c)
      if (!is_pivot[c]) free.push_back(c);

    Mat pi(f, free.size(), t.dims[v]);
    for (int c = 0; c < t.dims[v]; ++c) {
      if (!is_pivot[c]) {
        const std::size_t q =
            std::lower_bound(free.begin(), free.end(), c) - free.begin();
        pi.set(q, c, f.one());
      } else {
        const std::size_t i = std::lower_bound(r.pivot_cols.begin(), r.pivot_cols.end(),
                                               static_cast<std::size_t>(c)) -
                              r.pivot_cols.begin();
        for (std::size_t q = 0; q < free.size(); ++q)
          pi.set(q, c, f.neg(r.reduced.at(i, free[q])));
      }
    }
    Mat s(f, t.dims[v], free.size());
    for (std::size_t q = 0; q < free.size(); ++q) s.set(free[q], q, f.one());
    proj.push_back(std::move(pi));
    section.push_back(std::move(s));
  }

  PosetModule coker(t.poset, f);
  for (std::size_t v = 0; v < n; ++v) coker.dims[v] = static_cast<int>(proj[v].rows());
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    auto [a, b] = p.covers()[k];
    coker.edges[k] = proj[b] * t.edges[k] * section[a];
  }
  ModuleMorphism out{t, coker, std::move(proj)};
  return {std::move(coker), std::move(out)};
}

PosetModule dual_module(const PosetModule& m, std::shared_ptr<const Poset> opposite) {
  if (opposite->size() != m.poset->size())
    throw SemanticError("dual over a poset of the wrong size");
  PosetModule d(std::move(opposite), m.field);
  d.dims = m.dims;
  for (std::size_t k = 0; k < d.poset->covers().size(); ++k) {
    auto [u, v] = d.poset->covers()[k];  // u below v in the opposite, so (v, u) covers here
    d.edges[k] = m.edge(v, u).transpose();
  }
  return d;
}

namespace {

void check_antichain(const Poset& p, const std::vector<int>& antichain) {
  for (int x : antichain)
    if (x < 0 || static_cast<std::size_t>(x) >= p.size())
      throw NotAnAntichainError("element id out of range");
  for (std::size_t i = 0; i < antichain.size(); ++i)
    for (std::size_t j = 0; j < antichain.size(); ++j)
      if (i != j && p.leq(antichain[i], antichain[j]))
        throw NotAnAntichainError("elements " + p.label(antichain[i]) + " and " +
                                  p.label(antichain[j]) + " are comparable");
}

std::vector<bool> antichain_up_support(const Poset& p, const std::vector<int>& antichain) {
  check_antichain(p, antichain);
  std::vector<bool> s(p.size(), false);
  for (std::size_t v = 0; v < p.size(); ++v)
    for (int x : antichain)
      if (p.leq(x, static_cast<int>(v))) s[v] = true;
  return s;
}

int bottom_of(const Poset& p) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    bool min = true;
    for (std::size_t w = 0; w < p.size() && min; ++w)
      if (!p.leq(static_cast<int>(v), static_cast<int>(w))) min = false;
    if (min) return static_cast<int>(v);
  }
  throw SemanticError("poset has no minimum element");
}

}  // namespace

std::pair<PosetModule, ModuleMorphism> antichain_submodule(std::shared_ptr<const Poset> p,
                                                           const Field& f,
                                                           const std::vector<int>& antichain) {
  const int m = bottom_of(*p);
  std::vector<bool> s = antichain_up_support(*p, antichain);
  PosetModule sub = thin_module(p, f, s);
  PosetModule amb = projective_module(p, f, m);
  ModuleMorphism incl{sub, amb, {}};
  for (std::size_t v = 0; v < p->size(); ++v) {
    Mat map(f, amb.dims[v], sub.dims[v]);
    if (s[v]) map.set(0, 0, f.one());
    incl.maps.push_back(std::move(map));
  }
  return {std::move(sub), std::move(incl)};
}

PosetModule antichain_quotient(std::shared_ptr<const Poset> p, const Field& f,
                               const std::vector<int>& antichain) {
  bottom_of(*p);  // same precondition as the submodule
  std::vector<bool> s = antichain_up_support(*p, antichain);
  s.flip();
  return thin_module(std::move(p), f, s);
}

std::optional<std::vector<int>> decompose_projective(const PosetModule& m) {
  auto [summands, epi] = projective_cover(m);
  auto [ker, incl] = kernel_of(epi);
  (void)incl;
  if (!ker.is_zero()) return std::nullopt;
  return summands;
}

}  // namespace lathom
