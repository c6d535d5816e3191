// SPDX-License-Identifier: Apache-2.0

#include "lattice.hpp"

#include <algorithm>

namespace lathom {

Lattice Lattice::from_poset(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw NotALatticeError(0, 0, "empty poset");
  Lattice l(p);
  l.join_.assign(n, std::vector<int>(n, -1));
  l.meet_.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      int lub = -1, glb = -1;
      for (std::size_t c = 0; c < n; ++c) {
        if (p.leq(a, c) && p.leq(b, c)) {
          bool least = true;
          for (std::size_t d = 0; d < n && least; ++d)
            if (p.leq(a, d) && p.leq(b, d) && !p.leq(c, d)) least = false;
          if (least) lub = static_cast<int>(c);
        }
        if (p.leq(c, a) && p.leq(c, b)) {
          bool greatest = true;
          for (std::size_t d = 0; d < n && greatest; ++d)
            if (p.leq(d, a) && p.leq(d, b) && !p.leq(d, c)) greatest = false;
          if (greatest) glb = static_cast<int>(c);
        }
      }
      if (lub == -1)
        throw NotALatticeError(static_cast<int>(a), static_cast<int>(b),
                               "elements " + p.label(a) + " and " + p.label(b) +
                                   " have no least upper bound");
      if (glb == -1)
        throw NotALatticeError(static_cast<int>(a), static_cast<int>(b),
                               "elements " + p.label(a) + " and " + p.label(b) +
                                   " have no greatest lower bound");
      l.join_[a][b] = l.join_[b][a] = lub;
      l.meet_[a][b] = l.meet_[b][a] = glb;
    }
  l.bottom_ = 0;
  l.top_ = 0;
  for (std::size_t x = 1; x < n; ++x) {
    l.bottom_ = l.meet_[l.bottom_][x];
    l.top_ = l.join_[l.top_][x];
  }
  return l;
}

int Lattice::join_of(const std::vector<int>& xs) const {
  int r = bottom_;
  for (int x : xs) r = join_[r][x];
  return r;
}

int Lattice::meet_of(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet_[r][x];
  return r;
}

bool Lattice::is_distributive() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet_[a][join_[b][c]] != join_[meet_[a][b]][meet_[a][c]]) return false;
  return true;
}

std::optional<ForbiddenSublattice> Lattice::find_forbidden_sublattice() const {
  const int n = static_cast<int>(size());
  std::array<int, 5> s{};
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) {
            bool closed = true;
            for (int i = 0; i < 5 && closed; ++i)
              for (int j = i + 1; j < 5 && closed; ++j) {
                auto member = [&](int v) {
                  return v == s[0] || v == s[1] || v == s[2] || v == s[3] || v == s[4];
                };
                if (!member(join_[s[i]][s[j]]) || !member(meet_[s[i]][s[j]])) closed = false;
              }
            if (!closed) continue;

            std::vector<int> all(s.begin(), s.end());
            const int bot = meet_of(all), top = join_of(all);
            std::vector<int> mid;
            for (int v : all)
              if (v != bot && v != top) mid.push_back(v);
            if (mid.size() != 3) continue;

            int comparable = 0;
            for (int i = 0; i < 3; ++i)
              for (int j = i + 1; j < 3; ++j)
                if (!p_.incomparable(mid[i], mid[j])) ++comparable;

            if (comparable == 0) {
              bool diamond = true;
              for (int i = 0; i < 3 && diamond; ++i)
                for (int j = i + 1; j < 3 && diamond; ++j)
                  if (join_[mid[i]][mid[j]] != top || meet_[mid[i]][mid[j]] != bot)
                    diamond = false;
              if (diamond) return ForbiddenSublattice{"diamond", s};
            } else if (comparable == 1) {
              // the two comparable middles form the long side of the pentagon
              int u = -1, v = -1, w = -1;
              for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                  if (i != j && p_.less(mid[i], mid[j])) {
                    u = mid[i];
                    v = mid[j];
                    w = mid[3 - i - j];
                  }
              if (u != -1 && join_[u][w] == top && join_[v][w] == top &&
                  meet_[u][w] == bot && meet_[v][w] == bot)
                return ForbiddenSublattice{"pentagon", s};
            }
          }
  return std::nullopt;
}

std::vector<int> Lattice::join_irreducibles() const {
  const int n = static_cast<int>(size());
  std::vector<int> by_covers, by_joins;
  for (int x = 0; x < n; ++x)
    if (x != bottom_ && p_.cocovers_of(x).size() == 1) by_covers.push_back(x);
  for (int x = 0; x < n; ++x) {
    if (x == bottom_) continue;
    bool irr = true;
    for (int a = 0; a < n && irr; ++a)
      for (int b = a; b < n && irr; ++b)
        if (join_[a][b] == x && a != x && b != x) irr = false;
    if (irr) by_joins.push_back(x);
  }
  if (by_covers != by_joins)
    throw InternalError("join-irreducible characterizations disagree");
  return by_covers;
}

std::vector<int> Lattice::meet_irreducibles() const {
  const int n = static_cast<int>(size());
  std::vector<int> by_covers, by_meets;
  for (int x = 0; x < n; ++x)
    if (x != top_ && p_.covers_of(x).size() == 1) by_covers.push_back(x);
  for (int x = 0; x < n; ++x) {
    if (x == top_) continue;
    bool irr = true;
    for (int a = 0; a < n && irr; ++a)
      for (int b = a; b < n && irr; ++b)
        if (meet_[a][b] == x && a != x && b != x) irr = false;
    if (irr) by_meets.push_back(x);
  }
  if (by_covers != by_meets)
    throw InternalError("meet-irreducible characterizations disagree");
  return by_covers;
}

Lattice::BirkhoffData Lattice::birkhoff() const {
  std::vector<int> j_elements = join_irreducibles();
  const std::size_t nj = j_elements.size();
  if (nj > 64) throw SizeError("too many join-irreducibles for mask representation");

  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nj; ++i) {
    labels.push_back(p_.label(j_elements[i]));
    for (std::size_t k = 0; k < nj; ++k)
      if (i != k && p_.less(j_elements[i], j_elements[k]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(k));
  }
  Poset j = Poset::from_covers(nj, pairs, labels);

  std::vector<std::uint64_t> iso(size());
  for (std::size_t a = 0; a < size(); ++a) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < nj; ++i)
      if (p_.leq(j_elements[i], static_cast<int>(a))) m |= 1ull << i;
    iso[a] = m;
  }

  // verify: bijection onto all ideals, join = union, meet = intersection
  std::vector<std::uint64_t> ideals = j.all_order_ideals();
  std::vector<std::uint64_t> image = iso;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != ideals)
    throw NotDistributiveError("join-irreducible ideals do not enumerate the order ideals");
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (iso[join_[a][b]] != (iso[a] | iso[b]) ||
          iso[meet_[a][b]] != (iso[a] & iso[b]))
        throw NotDistributiveError("join-irreducible representation is not a lattice map");
  return BirkhoffData{std::move(j_elements), std::move(j), std::move(iso)};
}

std::vector<int> Lattice::irredundant_join_decomposition(int a) const {
  std::vector<int> below;
  for (int j : join_irreducibles())
    if (p_.leq(j, a)) below.push_back(j);
  std::vector<int> dec;
  for (int j : below) {
    bool maximal = true;
    for (int k : below)
      if (k != j && p_.less(j, k)) maximal = false;
    if (maximal) dec.push_back(j);
  }
  // prune until irredundant; a no-op on distributive lattices
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < dec.size(); ++i) {
      std::vector<int> rest;
      for (std::size_t k = 0; k < dec.size(); ++k)
        if (k != i) rest.push_back(dec[k]);
      if (join_of(rest) == a) {
        dec = rest;
        changed = true;
        break;
      }
    }
  }
  if (join_of(dec) != a) throw InternalError("join decomposition does not join back");
  return dec;
}

std::vector<int> Lattice::min_complement(int x) const {
  std::vector<int> out;
  for (std::size_t z = 0; z < size(); ++z) {
    if (p_.leq(static_cast<int>(z), x)) continue;
    bool minimal = true;
    for (std::size_t w = 0; w < size() && minimal; ++w)
      if (!p_.leq(static_cast<int>(w), x) && p_.less(static_cast<int>(w), static_cast<int>(z)))
        minimal = false;
    if (minimal) out.push_back(static_cast<int>(z));
  }
  return out;
}

std::vector<int> Lattice::max_complement(int y) const {
  std::vector<int> out;
  for (std::size_t z = 0; z < size(); ++z) {
    if (p_.leq(y, static_cast<int>(z))) continue;
    bool maximal = true;
    for (std::size_t w = 0; w < size() && maximal; ++w)
      if (!p_.leq(y, static_cast<int>(w)) && p_.less(static_cast<int>(z), static_cast<int>(w)))
        maximal = false;
    if (maximal) out.push_back(static_cast<int>(z));
  }
  return out;
}

int Lattice::order_dimension_distributive() const {
  if (!is_distributive())
    throw NotDistributiveError("cover-count order dimension needs a distributive lattice");
  int best = 0;
  for (std::size_t x = 0; x < size(); ++x)
    best = std::max(best, static_cast<int>(p_.covers_of(static_cast<int>(x)).size()));
  return best;
}

std::vector<int> Lattice::rowmotion_permutation() const {
  BirkhoffData d = birkhoff();
  std::vector<int> perm(size(), -1);
  for (std::size_t a = 0; a < size(); ++a) {
    const std::uint64_t target = rowmotion(d.j, d.iso[a]);
    for (std::size_t b = 0; b < size(); ++b)
      if (d.iso[b] == target) {
        perm[a] = static_cast<int>(b);
        break;
      }
    if (perm[a] == -1) throw InternalError("rowmotion left the ideal image");
  }
  return perm;
}

std::vector<std::uint64_t> ideal_lattice_masks(const Poset& p) { return p.all_order_ideals(); }

Lattice ideal_lattice(const Poset& p) {
  std::vector<std::uint64_t> ideals = p.all_order_ideals();
  if (ideals.size() > 64)
    throw SizeError("ideal lattice would have " + std::to_string(ideals.size()) +
                    " elements (cap 64)");
  const std::size_t m = ideals.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t b = 0; b < p.size(); ++b)
      if (ideals[i] >> b & 1) {
        if (!first) s += ",";
        s += p.label(static_cast<int>(b));
        first = false;
      }
    labels[i] = s + "}";
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (i != k && (ideals[i] & ideals[k]) == ideals[i])
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(k));
  return Lattice::from_poset(Poset::from_covers(m, pairs, labels));
}

std::uint64_t rowmotion(const Poset& p, std::uint64_t ideal) {
  if (!p.is_down_closed(ideal)) throw NotAnIdealError("mask is not an order ideal");
  const std::uint64_t complement = p.full_mask() & ~ideal;
  return p.down_closure(p.minimal_of(complement));
}

}  // namespace lathom
