#pragma once

#include <random>
#include <vector>

#include "z2lab/ideal.hpp"
#include "z2lab/oracle.hpp"
#include "z2lab/semigroup.hpp"

namespace test {

using z2lab::NumericalSemigroup;
using z2lab::RelativeIdeal;
namespace oracle = z2lab::oracle;

inline NumericalSemigroup S(std::initializer_list<int> gens) { return NumericalSemigroup::from_generators(gens); }

inline RelativeIdeal I(const NumericalSemigroup& s, std::initializer_list<int> gens) {
  return RelativeIdeal::from_generators(s, gens);
}

inline std::vector<int> set_below(const RelativeIdeal& e, int bound) {
  std::vector<int> out;
  for (int z = e.min(); z < bound; ++z)
    if (e.contains(z)) out.push_back(z);
  return out;
}

// Exact comparison against a brute-force set over a window wide enough for
// both representations.
inline bool agrees(const RelativeIdeal& e, const oracle::BSet& o) {
  const int lo = std::min(e.min(), o.lo) - 2;
  const int hi = std::max(e.conductor(), o.hi) + 2;
  for (int z = lo; z < hi; ++z)
    if (e.contains(z) != o.contains(z)) return false;
  return true;
}

inline oracle::BSet as_oracle(const RelativeIdeal& e) {
  return oracle::make_set(e.min(), e.conductor(), [&](int z) { return e.contains(z); });
}

// Random relative ideal given by 1..3 generators in [lo, hi].
inline RelativeIdeal random_ideal(const NumericalSemigroup& s, std::mt19937& rng, int lo = -6, int hi = 14) {
  std::uniform_int_distribution<int> count(1, 3), pick(lo, hi);
  std::vector<int> gens;
  for (int i = count(rng); i > 0; --i) gens.push_back(pick(rng));
  return RelativeIdeal::from_generators(s, gens);
}

inline std::vector<NumericalSemigroup> small_family() {
  std::vector<NumericalSemigroup> out;
  for (std::vector<int> g : std::vector<std::vector<int>>{{1},       {2, 3},     {2, 5},     {3, 4},     {3, 4, 5},
                                                          {3, 5, 7}, {4, 5, 6},  {4, 5, 7},  {4, 6, 7},  {4, 7, 9},
                                                          {5, 6, 7}, {5, 6, 8, 9}, {5, 7, 9, 11}, {6, 7, 8, 9, 10},
                                                          {3, 7},    {5, 8, 11, 14}, {6, 9, 11, 14}, {7, 8, 9, 11, 13}})
    out.push_back(NumericalSemigroup::from_generators(g));
  return out;
}

}  // namespace test
