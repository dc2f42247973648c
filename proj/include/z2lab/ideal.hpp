#pragma once

#include <span>
#include <string>
#include <vector>

#include "z2lab/semigroup.hpp"

namespace z2lab {

/// A relative ideal E of a numerical semigroup S: a set of integers with
/// E + S ⊆ E that is bounded below and contains every integer past some
/// point. It stands for the monomial fractional ideal of k[[t^S]] spanned by
/// t^z, z ∈ E.
///
/// Stored canonically as (lower, conductor, window) where lower = min E,
/// conductor is the least c with [c, ∞) ⊆ E, and window holds membership on
/// [lower, conductor). Two ideals are equal iff their canonical forms agree.
class RelativeIdeal {
 public:
  /// Union of the translates g + S. Throws EmptyGenerators.
  static RelativeIdeal from_generators(const NumericalSemigroup& base, std::span<const int> gens);
  static RelativeIdeal from_generators(const NumericalSemigroup& base, std::initializer_list<int> gens) {
    return from_generators(base, std::span<const int>(gens.begin(), gens.size()));
  }

  /// Members are the z in [lo, hi) with member(z), plus every z >= hi. The
  /// result is normalized and checked for E + S ⊆ E (throws InvalidAlgebra).
  template <typename Pred>
  static RelativeIdeal from_window(const NumericalSemigroup& base, int lo, int hi, Pred member) {
    std::vector<char> bits;
    bits.reserve(static_cast<std::size_t>(hi > lo ? hi - lo : 0));
    for (int z = lo; z < hi; ++z) bits.push_back(member(z) ? 1 : 0);
    return normalized(base, lo, std::move(bits));
  }

  /// S itself, viewed as the unit ideal.
  static RelativeIdeal whole(const NumericalSemigroup& base);
  /// M = S \ {0}, the maximal ideal.
  static RelativeIdeal maximal(const NumericalSemigroup& base);
  /// The integers z >= from.
  static RelativeIdeal ray(const NumericalSemigroup& base, int from);

  const NumericalSemigroup& base() const noexcept { return base_; }
  int min() const noexcept { return lower_; }
  int conductor() const noexcept { return conductor_; }
  bool contains(int z) const noexcept {
    if (z >= conductor_) return true;
    if (z < lower_) return false;
    return window_[static_cast<std::size_t>(z - lower_)] != 0;
  }
  std::vector<int> members_below_conductor() const;

  RelativeIdeal shifted(int by) const;
  bool is_subset_of(const RelativeIdeal& other) const;
  /// True when this ideal is a translate of `other` (isomorphic as modules).
  bool is_translate_of(const RelativeIdeal& other) const;

  /// "{g1,g2,...}" listing of the minimal generators.
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept;

 private:
  RelativeIdeal(NumericalSemigroup base, int lower, int conductor, std::vector<char> window)
      : base_(std::move(base)), lower_(lower), conductor_(conductor), window_(std::move(window)) {}

  static RelativeIdeal normalized(const NumericalSemigroup& base, int lo, std::vector<char> bits);

  NumericalSemigroup base_;
  int lower_;
  int conductor_;
  std::vector<char> window_;
};

/// Ring-theoretic sum of ideals, i.e. set union.
RelativeIdeal sum_ideal(const RelativeIdeal& e, const RelativeIdeal& f);
/// Ring-theoretic product, i.e. Minkowski sum E + F.
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal intersect(const RelativeIdeal& e, const RelativeIdeal& f);
/// E − F = {z : z + F ⊆ E}, the value set of the colon E : F.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);

/// K = {x : F(S) − x ∉ S}; min K = 0 and S ⊆ K.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);
/// tr(E) = E + (S − E).
RelativeIdeal trace(const RelativeIdeal& e);
/// E \ (E + M).
std::vector<int> min_gens(const RelativeIdeal& e);
inline int mu(const RelativeIdeal& e) { return static_cast<int>(min_gens(e).size()); }
/// #(E \ F); throws NotContained unless F ⊆ E.
int length_quotient(const RelativeIdeal& e, const RelativeIdeal& f);
/// #((E − M) \ E).
int type_of_ideal(const RelativeIdeal& e);
/// The stable value of K, K+K, K+K+K, ...; the value set of R[K].
RelativeIdeal ring_generated_by_K(const NumericalSemigroup& s);

}  // namespace z2lab
