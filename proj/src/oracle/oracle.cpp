#include "z2lab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace z2lab::oracle {

int BSet::min() const {
  for (int z = lo; z < hi; ++z)
    if (contains(z)) return z;
  return hi;
}

int BSet::conductor() const {
  int c = hi;
  while (c - 1 >= lo && contains(c - 1)) --c;
  return c;
}

std::vector<int> BSet::members_below(int bound) const {
  std::vector<int> out;
  for (int z = std::min(lo, bound); z < bound; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

bool same(const BSet& a, const BSet& b) {
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi, b.hi);
  for (int z = lo; z < hi; ++z)
    if (a.contains(z) != b.contains(z)) return false;
  return true;
}

bool subset(const BSet& a, const BSet& b) {
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi, b.hi);
  for (int z = lo; z < hi; ++z)
    if (a.contains(z) && !b.contains(z)) return false;
  return true;
}

BSet unite(const BSet& a, const BSet& b) {
  return make_set(std::min(a.lo, b.lo), std::max(a.hi, b.hi), [&](int z) { return a.contains(z) || b.contains(z); });
}

BSet meet(const BSet& a, const BSet& b) {
  return make_set(std::min(a.lo, b.lo), std::max(a.hi, b.hi), [&](int z) { return a.contains(z) && b.contains(z); });
}

BSet minkowski(const BSet& a, const BSet& b) {
  const int amin = a.min();
  const int bmin = b.min();
  return make_set(amin + bmin, a.hi + bmin, [&](int z) {
    for (int x = amin; x <= z - bmin; ++x)
      if (a.contains(x) && b.contains(z - x)) return true;
    return false;
  });
}

BSet shift(const BSet& a, int by) { return BSet{a.lo + by, a.hi + by, a.bits}; }

BSet colon(const BSet& a, const BSet& b) {
  const int bmin = b.min();
  return make_set(a.min() - bmin, a.hi - bmin, [&](int z) {
    const int top = std::max(b.hi, a.hi - z);
    for (int y = bmin; y <= top; ++y)
      if (b.contains(y) && !a.contains(z + y)) return false;
    return true;
  });
}

int count_difference(const BSet& a, const BSet& b) {
  int n = 0;
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.hi, b.hi);
  for (int z = lo; z < hi; ++z)
    if (a.contains(z) && !b.contains(z)) ++n;
  return n;
}

BSet semigroup(const std::vector<int>& gens) {
  const int top = *std::max_element(gens.begin(), gens.end());
  const int bound = 2 * top * top + 1;
  std::vector<char> reach(static_cast<std::size_t>(bound), 0);
  reach[0] = 1;
  for (int z = 0; z < bound; ++z) {
    if (!reach[static_cast<std::size_t>(z)]) continue;
    for (int g : gens)
      if (z + g < bound) reach[static_cast<std::size_t>(z + g)] = 1;
  }
  return BSet{0, bound, std::move(reach)};
}

BSet maximal(const BSet& s) {
  return make_set(0, std::max(s.hi, 1), [&](int z) { return z > 0 && s.contains(z); });
}

int frobenius(const BSet& s) {
  for (int z = s.hi - 1; z >= 0; --z)
    if (!s.contains(z)) return z;
  return -1;
}

std::vector<int> gaps(const BSet& s) {
  std::vector<int> out;
  for (int z = 0; z < s.hi; ++z)
    if (!s.contains(z)) out.push_back(z);
  return out;
}

std::vector<int> pseudo_frobenius(const BSet& s) {
  const int f = frobenius(s);
  if (f < 0) return {-1};
  std::vector<int> out;
  for (int g : gaps(s)) {
    bool pf = true;
    for (int m = 1; m <= f + 1 && pf; ++m)
      if (s.contains(m) && !s.contains(g + m)) pf = false;
    if (pf) out.push_back(g);
  }
  return out;
}

std::vector<int> minimal_generators(const BSet& s) {
  const int f = frobenius(s);
  std::vector<int> out;
  for (int m = 1; m <= 2 * (f + 1) + 1; ++m) {
    if (!s.contains(m)) continue;
    bool split = false;
    for (int a = 1; a < m && !split; ++a) split = s.contains(a) && s.contains(m - a);
    if (!split) out.push_back(m);
  }
  return out;
}

BSet canonical(const BSet& s) {
  const int f = frobenius(s);
  return make_set(0, f + 1, [&](int x) { return !s.contains(f - x); });
}

std::vector<int> module_generators(const BSet& e, const BSet& s) {
  const BSet em = minkowski(e, maximal(s));
  std::vector<int> out;
  for (int z = e.min(); z < em.hi; ++z)
    if (e.contains(z) && !em.contains(z)) out.push_back(z);
  return out;
}

BSet ideal_from(const std::vector<int>& gens, const BSet& s) {
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  return make_set(*lo, *hi + s.hi, [&](int z) {
    return std::any_of(gens.begin(), gens.end(), [&](int g) { return s.contains(z - g); });
  });
}

SemigroupFacts classify(const BSet& s) {
  SemigroupFacts f;
  f.frobenius = frobenius(s);
  f.type = static_cast<int>(pseudo_frobenius(s).size());
  f.embdim = static_cast<int>(minimal_generators(s).size());
  f.symmetric = 2 * static_cast<int>(gaps(s).size()) == f.frobenius + 1;
  const BSet m = maximal(s);
  const BSet k = canonical(s);
  f.almost_gorenstein = same(minkowski(m, k), m);
  f.nearly_gorenstein = subset(m, minkowski(colon(s, k), k));
  BSet power = k;
  while (true) {
    BSet next = minkowski(power, k);
    if (same(next, power)) break;
    power = std::move(next);
  }
  f.e1 = count_difference(power, s);
  return f;
}

SemigroupFacts classify(const std::vector<int>& gens) { return classify(semigroup(gens)); }

namespace {

struct Pair {
  BSet c0;
  BSet c1;
};

struct PairRing {
  std::optional<int> v;
  BSet s;
  BSet m;

  Pair mul(const Pair& p, const Pair& q) const {
    BSet even = minkowski(p.c0, q.c0);
    if (v) even = unite(even, shift(minkowski(p.c1, q.c1), *v));
    return {even, unite(minkowski(p.c0, q.c1), minkowski(p.c1, q.c0))};
  }
  // A : X with A = (S, M).
  Pair colon_a(const Pair& x) const {
    BSet q0 = meet(colon(s, x.c0), colon(m, x.c1));
    BSet q1 = colon(m, x.c0);
    if (v) q1 = meet(q1, colon(s, shift(x.c1, *v)));
    return {q0, q1};
  }
};

bool pair_subset(const Pair& a, const Pair& b) { return subset(a.c0, b.c0) && subset(a.c1, b.c1); }

}  // namespace

GradedFacts graded_pair_model(const std::vector<int>& gens, std::optional<int> v) {
  PairRing ring{v, semigroup(gens), {}};
  ring.m = maximal(ring.s);
  const BSet k = canonical(ring.s);
  const Pair n{ring.m, ring.m};
  const Pair ka{colon(k, ring.m), k};
  const Pair nk = ring.mul(n, ka);
  const Pair tr = ring.mul(nk, ring.colon_a(nk));
  GradedFacts g;
  g.almost_gorenstein = pair_subset(n, tr);
  g.type = count_difference(ka.c0, nk.c0) + count_difference(ka.c1, nk.c1);
  const Pair n2 = ring.mul(n, n);
  g.embdim = count_difference(ring.m, n2.c0) + count_difference(ring.m, n2.c1);
  g.gorenstein = g.type == 1;
  return g;
}

SemigroupFacts odd_shift_model(const std::vector<int>& gens, int v) {
  const BSet s = semigroup(gens);
  const BSet m = maximal(s);
  const BSet model = make_set(0, 2 * s.hi + std::abs(v) + 2, [&](int z) {
    if (z % 2 == 0) return s.contains(z / 2);
    return z - v > 0 && m.contains((z - v) / 2);
  });
  return classify(model);
}

int rank(std::vector<std::vector<Q>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Q inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Q f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Q determinant(const std::vector<std::vector<Q>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Q det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Q term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

int socle_dim(const Table& table) {
  const std::size_t n = table.size();
  std::vector<std::vector<Q>> rows;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Q> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = table[i][j][k];
      rows.push_back(std::move(row));
    }
  return static_cast<int>(n) - rank(std::move(rows));
}

}  // namespace z2lab::oracle
