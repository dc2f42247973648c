#pragma once

// Slow reference implementations used to cross-check the main library. Each
// works directly from generators or multiplication tables with explicit
// bounded quantifiers and shares no code with the fast paths.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace z2lab::oracle {

/// Integers z with z ∈ bits[z − lo] for lo <= z < hi, and every z >= hi.
struct BSet {
  int lo = 0;
  int hi = 0;
  std::vector<char> bits;

  bool contains(int z) const {
    if (z >= hi) return true;
    if (z < lo) return false;
    return bits[static_cast<std::size_t>(z - lo)] != 0;
  }
  int min() const;
  /// Least c with [c, ∞) inside.
  int conductor() const;
  std::vector<int> members_below(int bound) const;
};

template <typename Pred>
BSet make_set(int lo, int hi, Pred pred) {
  BSet s{lo, hi, {}};
  for (int z = lo; z < hi; ++z) s.bits.push_back(pred(z) ? 1 : 0);
  return s;
}

bool same(const BSet& a, const BSet& b);
bool subset(const BSet& a, const BSet& b);
BSet unite(const BSet& a, const BSet& b);
BSet meet(const BSet& a, const BSet& b);
BSet minkowski(const BSet& a, const BSet& b);
BSet shift(const BSet& a, int by);
/// {z : z + b ⊆ a}.
BSet colon(const BSet& a, const BSet& b);
/// #(a \ b), with b ⊆ a assumed.
int count_difference(const BSet& a, const BSet& b);

/// S from generators by direct reachability.
BSet semigroup(const std::vector<int>& gens);
BSet maximal(const BSet& s);
int frobenius(const BSet& s);
std::vector<int> gaps(const BSet& s);
/// Gaps g with g + m ∈ S for every m ∈ M; {−1} for the naturals.
std::vector<int> pseudo_frobenius(const BSet& s);
std::vector<int> minimal_generators(const BSet& s);
BSet canonical(const BSet& s);
/// Minimal generators of an S-module E: members not in E + M.
std::vector<int> module_generators(const BSet& e, const BSet& s);
/// E as the union of g + S over explicit generators.
BSet ideal_from(const std::vector<int>& gens, const BSet& s);

struct SemigroupFacts {
  int frobenius = -1;
  int type = 1;
  int embdim = 1;
  bool symmetric = true;
  bool almost_gorenstein = true;  // M + K = M
  bool nearly_gorenstein = true;  // M ⊆ (S − K) + K
  int e1 = 0;
};
SemigroupFacts classify(const std::vector<int>& gens);
SemigroupFacts classify(const BSet& s);

/// Graded pair model of A = R ×_φ 𝔪 with α = t^v (or α = 0): homogeneous
/// value sets (P0, P1) in the R and 𝔪 components, product
/// (P0+Q0 ∪ v+P1+Q1, P0+Q1 ∪ P1+Q0) and canonical module (K − M, K).
struct GradedFacts {
  bool almost_gorenstein = false;  // 𝔫 ⊆ tr_A(𝔫 K_A)
  int type = 0;
  int embdim = 0;
  bool gorenstein = false;
};
/// `v` empty means α = 0.
GradedFacts graded_pair_model(const std::vector<int>& gens, std::optional<int> v);

/// Odd shift model 2S ∪ (2M + v) computed from scratch.
SemigroupFacts odd_shift_model(const std::vector<int>& gens, int v);

using Q = mpq_class;
using Table = std::vector<std::vector<std::vector<Q>>>;  // table[i][j][k] = c_ij^k

/// Plain Gauss-Jordan over the rationals.
int rank(std::vector<std::vector<Q>> rows);
/// Permutation expansion; small matrices only.
Q determinant(const std::vector<std::vector<Q>>& m);
/// dim {x : b_i x = 0 for i >= 1}, from the multiplication table.
int socle_dim(const Table& table);

}  // namespace z2lab::oracle
