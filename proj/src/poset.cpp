// SPDX-License-Identifier: Apache-2.0

#include "poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"

namespace lathom {

namespace {

void require_small(const Poset& p, std::size_t cap, const char* what) {
  if (p.size() > cap)
    throw SizeError(std::string(what) + " supports at most " + std::to_string(cap) +
                    " elements, got " + std::to_string(p.size()));
}

}  // namespace

Poset Poset::from_covers(std::size_t n, const std::vector<std::pair<int, int>>& pairs,
                         std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw SemanticError("cover pair (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") out of range for " + std::to_string(n) + " elements");
    if (a == b) throw CycleError("self-cover at element " + std::to_string(a));
    p.leq_[a][b] = true;
  }
  // Warshall closure of the strict part, then cycle check.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq_[k][j]) p.leq_[i][j] = true;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq_[i][j] && p.leq_[j][i])
        throw CycleError("cover relation has a cycle through elements " + std::to_string(i) +
                         " and " + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i) p.leq_[i][i] = true;

  p.covers_of_.assign(n, {});
  p.cocovers_of_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq_[a][b]) continue;
      bool has_mid = false;
      for (std::size_t c = 0; c < n && !has_mid; ++c)
        if (c != a && c != b && p.leq_[a][c] && p.leq_[c][b]) has_mid = true;
      if (!has_mid) {
        p.covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
        p.covers_of_[a].push_back(static_cast<int>(b));
        p.cocovers_of_[b].push_back(static_cast<int>(a));
      }
    }
  std::sort(p.covers_.begin(), p.covers_.end());

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  } else if (labels.size() != n) {
    throw SemanticError("label count does not match element count");
  }
  {
    std::vector<std::string> seen = labels;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw SemanticError("element labels must be distinct");
  }
  p.labels_ = std::move(labels);
  return p;
}

int Poset::cover_index(int a, int b) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(a, b));
  if (it == covers_.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - covers_.begin());
}

int Poset::index_of_label(const std::string& s) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == s) return static_cast<int>(i);
  return -1;
}

Poset Poset::opposite() const {
  std::vector<std::pair<int, int>> rev;
  rev.reserve(covers_.size());
  for (auto [a, b] : covers_) rev.emplace_back(b, a);
  return from_covers(n_, rev, labels_);
}

std::uint64_t Poset::full_mask() const {
  require_small(*this, 64, "mask arithmetic");
  return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

std::uint64_t Poset::down_closure(std::uint64_t s) const {
  require_small(*this, 64, "mask arithmetic");
  std::uint64_t r = 0;
  for (std::size_t b = 0; b < n_; ++b) {
    if (!(s >> b & 1)) continue;
    for (std::size_t a = 0; a < n_; ++a)
      if (leq_[a][b]) r |= 1ull << a;
  }
  return r;
}

std::uint64_t Poset::up_closure(std::uint64_t s) const {
  require_small(*this, 64, "mask arithmetic");
  std::uint64_t r = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!(s >> a & 1)) continue;
    for (std::size_t b = 0; b < n_; ++b)
      if (leq_[a][b]) r |= 1ull << b;
  }
  return r;
}

bool Poset::is_down_closed(std::uint64_t s) const { return down_closure(s) == s; }

std::uint64_t Poset::minimal_of(std::uint64_t s) const {
  require_small(*this, 64, "mask arithmetic");
  std::uint64_t r = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!(s >> a & 1)) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < n_ && minimal; ++b)
      if (b != a && (s >> b & 1) && leq_[b][a]) minimal = false;
    if (minimal) r |= 1ull << a;
  }
  return r;
}

std::uint64_t Poset::maximal_of(std::uint64_t s) const {
  require_small(*this, 64, "mask arithmetic");
  std::uint64_t r = 0;
  for (std::size_t a = 0; a < n_; ++a) {
    if (!(s >> a & 1)) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < n_ && maximal; ++b)
      if (b != a && (s >> b & 1) && leq_[a][b]) maximal = false;
    if (maximal) r |= 1ull << a;
  }
  return r;
}

std::vector<std::uint64_t> Poset::all_order_ideals() const {
  require_small(*this, 20, "order ideal enumeration");
  std::vector<std::uint64_t> ideals;
  const std::uint64_t full = n_ == 0 ? 0 : (1ull << n_) - 1;
  for (std::uint64_t s = 0;; ++s) {
    if (is_down_closed(s)) ideals.push_back(s);
    if (s == full) break;
  }
  return ideals;
}

bool Poset::is_bounded(int* bottom, int* top) const {
  if (n_ == 0) return false;
  int bot = -1, tp = -1;
  for (std::size_t x = 0; x < n_; ++x) {
    bool is_min = true, is_max = true;
    for (std::size_t y = 0; y < n_; ++y) {
      if (y == x) continue;
      if (leq_[y][x]) is_min = false;
      if (leq_[x][y]) is_max = false;
    }
    if (is_min) {
      if (bot != -1) return false;
      bot = static_cast<int>(x);
    }
    if (is_max) {
      if (tp != -1) return false;
      tp = static_cast<int>(x);
    }
  }
  // unique minimal element is a minimum only if below everything; with a
  // unique minimal element in a finite poset that is automatic unless the
  // poset is disconnected, so check properly
  for (std::size_t y = 0; y < n_; ++y)
    if (!leq_[bot][y] || !leq_[y][tp]) return false;
  if (bottom) *bottom = bot;
  if (top) *top = tp;
  return true;
}

bool Poset::is_connected() const {
  if (n_ == 0) return true;
  std::vector<int> comp(n_, -1);
  std::vector<std::size_t> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n_; ++w) {
      if (comp[w] != -1 || w == v) continue;
      if (leq_[v][w] || leq_[w][v]) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  return std::none_of(comp.begin(), comp.end(), [](int c) { return c == -1; });
}

namespace {

// Kuhn's augmenting-path matching on the split comparability graph.
bool try_augment(const Poset& p, int a, std::vector<bool>& visited, std::vector<int>& match_r) {
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (!p.less(a, static_cast<int>(b)) || visited[b]) continue;
    visited[b] = true;
    if (match_r[b] == -1 || try_augment(p, match_r[b], visited, match_r)) {
      match_r[b] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

std::pair<int, std::vector<int>> Poset::width_with_witness() const {
  const std::size_t n = n_;
  std::vector<int> match_r(n, -1);
  int matching = 0;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> visited(n, false);
    if (try_augment(*this, static_cast<int>(a), visited, match_r)) ++matching;
  }
  const int width = static_cast<int>(n) - matching;

  // Koenig: runs of alternating paths from unmatched left vertices give a
  // minimum vertex cover; the antichain is what both sides leave uncovered.
  std::vector<int> match_l(n, -1);
  for (std::size_t b = 0; b < n; ++b)
    if (match_r[b] != -1) match_l[match_r[b]] = static_cast<int>(b);
  std::vector<bool> zl(n, false), zr(n, false);
  std::vector<int> stack;
  for (std::size_t a = 0; a < n; ++a)
    if (match_l[a] == -1) {
      zl[a] = true;
      stack.push_back(static_cast<int>(a));
    }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, static_cast<int>(b)) || zr[b]) continue;
      zr[b] = true;
      int a2 = match_r[b];
      if (a2 != -1 && !zl[a2]) {
        zl[a2] = true;
        stack.push_back(a2);
      }
    }
  }
  std::vector<int> antichain;
  for (std::size_t v = 0; v < n; ++v)
    if (zl[v] && !zr[v]) antichain.push_back(static_cast<int>(v));
  if (static_cast<int>(antichain.size()) != width)
    throw InternalError("width witness size mismatch");
  return {width, antichain};
}

Poset Poset::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers") ||
      !j["elements"].is_array() || !j["covers"].is_array())
    throw ParseError("poset JSON needs an object with \"elements\" and \"covers\" arrays");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("poset element names must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw ParseError("poset covers must be [from, to] index pairs");
    pairs.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  const std::size_t n = labels.size();
  return from_covers(n, pairs, std::move(labels));
}

std::string Poset::to_json() const {
  nlohmann::ordered_json j;
  j["elements"] = labels_;
  auto& cv = j["covers"] = nlohmann::ordered_json::array();
  for (auto [a, b] : covers_) cv.push_back({a, b});
  return j.dump();
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, long budget) {
  const std::size_t n = p.size();
  std::vector<std::vector<int>> out;
  std::vector<int> pending(n, 0);  // unplaced strict predecessors
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (p.less(static_cast<int>(a), static_cast<int>(b))) ++pending[b];
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  auto rec = [&](auto&& self) -> void {
    if (order.size() == n) {
      if (static_cast<long>(out.size()) >= budget)
        throw BudgetError("more than " + std::to_string(budget) + " linear extensions");
      out.push_back(order);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || pending[v] != 0) continue;
      placed[v] = true;
      order.push_back(static_cast<int>(v));
      for (std::size_t w = 0; w < n; ++w)
        if (p.less(static_cast<int>(v), static_cast<int>(w))) --pending[w];
      self(self);
      for (std::size_t w = 0; w < n; ++w)
        if (p.less(static_cast<int>(v), static_cast<int>(w))) ++pending[w];
      order.pop_back();
      placed[v] = false;
    }
  };
  rec(rec);
  return out;
}

namespace {

// Strict total order induced by an extension, as position array.
std::vector<int> positions(const std::vector<int>& ext) {
  std::vector<int> pos(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
  return pos;
}

// Exhaustive two-extension decision: a realizer {L1, L2} exists iff for some
// extension L1 the relation "poset order plus all incomparable pairs
// reversed from L1" is transitive, because L2 is forced pointwise by L1.
std::optional<std::vector<std::vector<int>>> realizer_of_two(
    const Poset& p, const std::vector<std::vector<int>>& exts) {
  const std::size_t n = p.size();
  for (const auto& ext : exts) {
    std::vector<int> pos = positions(ext);
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        r[a][b] = p.less(static_cast<int>(a), static_cast<int>(b)) ||
                  (p.incomparable(static_cast<int>(a), static_cast<int>(b)) && pos[b] < pos[a]);
      }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b) {
        if (!r[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (r[b][c] && !r[a][c]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;
    std::vector<int> second(n);
    std::iota(second.begin(), second.end(), 0);
    std::sort(second.begin(), second.end(), [&](int a, int b) { return r[a][b]; });
    return std::vector<std::vector<int>>{ext, second};
  }
  return std::nullopt;
}

using PairMask = std::vector<std::uint64_t>;

bool mask_covers(const PairMask& m, const PairMask& full) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((m[i] & full[i]) != full[i]) return false;
  return true;
}

}  // namespace

OrderDimResult order_dimension_oracle(const Poset& p, int t_max, long budget) {
  const std::size_t n = p.size();
  auto exts = linear_extensions(p, budget);
  if (exts.empty()) throw InternalError("poset has no linear extension");

  std::vector<std::pair<int, int>> inc;  // ordered incomparable pairs
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && p.incomparable(static_cast<int>(a), static_cast<int>(b)))
        inc.emplace_back(static_cast<int>(a), static_cast<int>(b));
  if (inc.empty()) return {1, {exts[0]}};
  if (t_max < 2) return {std::nullopt, {}};

  if (auto two = realizer_of_two(p, exts)) return {2, *two};
  if (t_max < 3) return {std::nullopt, {}};

  // An extension "breaks" the ordered pair (a, b) when it puts b below a; a
  // realizer is a set of extensions jointly breaking every ordered pair.
  const std::size_t words = (inc.size() + 63) / 64;
  std::vector<PairMask> breaks(exts.size(), PairMask(words, 0));
  for (std::size_t e = 0; e < exts.size(); ++e) {
    std::vector<int> pos = positions(exts[e]);
    for (std::size_t k = 0; k < inc.size(); ++k)
      if (pos[inc[k].second] < pos[inc[k].first]) breaks[e][k / 64] |= 1ull << (k % 64);
  }
  PairMask full(words, 0);
  for (std::size_t k = 0; k < inc.size(); ++k) full[k / 64] |= 1ull << (k % 64);
  std::vector<std::vector<std::size_t>> breakers(inc.size());
  for (std::size_t e = 0; e < exts.size(); ++e)
    for (std::size_t k = 0; k < inc.size(); ++k)
      if (breaks[e][k / 64] >> (k % 64) & 1) breakers[k].push_back(e);

  for (int t = 3; t <= t_max; ++t) {
    std::vector<std::size_t> chosen;
    PairMask covered(words, 0);
    auto dfs = [&](auto&& self) -> bool {
      if (mask_covers(covered, full)) return true;
      if (static_cast<int>(chosen.size()) == t) return false;
      // branch on the uncovered pair with the fewest breakers
      std::size_t best = inc.size();
      for (std::size_t k = 0; k < inc.size(); ++k) {
        if (covered[k / 64] >> (k % 64) & 1) continue;
        if (best == inc.size() || breakers[k].size() < breakers[best].size()) best = k;
      }
      for (std::size_t e : breakers[best]) {
        PairMask saved = covered;
        for (std::size_t i = 0; i < words; ++i) covered[i] |= breaks[e][i];
        chosen.push_back(e);
        if (self(self)) return true;
        chosen.pop_back();
        covered = saved;
      }
      return false;
    };
    if (dfs(dfs)) {
      std::vector<std::vector<int>> realizer;
      for (std::size_t e : chosen) realizer.push_back(exts[e]);
      return {t, realizer};
    }
  }
  return {std::nullopt, {}};
}

namespace {

std::uint64_t encode_less(const std::vector<std::vector<bool>>& less, const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less[i][j]) bits |= 1ull << (static_cast<std::size_t>(perm[i]) * n + perm[j]);
  return bits;
}

std::uint64_t canonical_of_less(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, encode_less(less, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset poset_of_less(std::size_t n, const std::vector<std::vector<bool>>& less) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less[a][b]) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_covers(n, pairs);
}

}  // namespace

std::uint64_t canonical_key(const Poset& p) {
  require_small(p, 8, "canonical key");
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) less[a][b] = p.less(static_cast<int>(a), static_cast<int>(b));
  return canonical_of_less(less);
}

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1 || n > 6) throw SizeError("poset enumeration supports 1 <= n <= 6");
  const std::size_t un = static_cast<std::size_t>(n);
  std::set<std::uint64_t> keys;
  std::vector<std::vector<bool>> less(un, std::vector<bool>(un, false));

  // Grow one element at a time; element k sits above a chosen down-closed
  // subset of 0..k-1, so the identity labeling is a linear extension and
  // every isomorphism class is hit.
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == un) {
      keys.insert(canonical_of_less(less));
      return;
    }
    for (std::uint32_t d = 0; d < (1u << k); ++d) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i) {
        if (!(d >> i & 1)) continue;
        for (std::size_t j = 0; j < i && closed; ++j)
          if (less[j][i] && !(d >> j & 1)) closed = false;
      }
      if (!closed) continue;
      for (std::size_t i = 0; i < k; ++i)
        if (d >> i & 1) less[i][k] = true;
      self(self, k + 1);
      for (std::size_t i = 0; i < k; ++i) less[i][k] = false;
    }
  };
  rec(rec, 0);

  std::vector<Poset> out;
  for (std::uint64_t key : keys) {
    std::vector<std::vector<bool>> m(un, std::vector<bool>(un, false));
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) m[i][j] = key >> (i * un + j) & 1;
    out.push_back(poset_of_less(un, m));
  }
  return out;
}

}  // namespace lathom
