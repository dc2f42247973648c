#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2lab {

/// A numerical semigroup S, i.e. a cofinite submonoid of the naturals.
///
/// Instances share their immutable state, so copies are cheap and values can
/// be passed freely between threads. All invariants (gaps, Frobenius number,
/// minimal generators, pseudo-Frobenius numbers) are computed once at
/// construction.
class NumericalSemigroup {
 public:
  /// Normalizes an arbitrary generating set. Throws EmptyGenerators or
  /// NotCoprime.
  static NumericalSemigroup from_generators(std::span<const int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
  }

  /// Builds the semigroup whose members are `member(z)` for 0 <= z < bound and
  /// every z >= bound. The predicate must describe an additively closed set
  /// containing 0.
  static NumericalSemigroup from_members(const std::function<bool(int)>& member, int bound);

  static NumericalSemigroup naturals() { return from_generators({1}); }

  const std::vector<int>& generators() const noexcept;
  const std::vector<int>& gaps() const noexcept;
  const std::vector<int>& pseudo_frobenius() const noexcept;

  int frobenius() const noexcept;
  int conductor() const noexcept { return frobenius() + 1; }
  int multiplicity() const noexcept;
  int embedding_dimension() const noexcept { return static_cast<int>(generators().size()); }
  int type() const noexcept { return static_cast<int>(pseudo_frobenius().size()); }

  bool contains(int z) const noexcept;
  bool is_naturals() const noexcept { return frobenius() == -1; }
  bool is_symmetric() const noexcept { return type() == 1; }

  /// "a,b,c" form of the minimal generators.
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept;

 private:
  struct Data;
  static std::shared_ptr<const Data> finish(std::vector<char> member_to_bound, int bound);
  explicit NumericalSemigroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Parses "3,4,5" (whitespace tolerated). Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace z2lab
