#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2lab/ideal.hpp"
#include "z2lab/rational.hpp"

namespace z2lab {

/// A Laurent series in t over the rationals, known exactly below a precision
/// N: α = Σ_{e < N} c_e t^e + O(t^N). Only nonzero coefficients are stored.
class LaurentSeries {
 public:
  /// The series O(t^precision).
  explicit LaurentSeries(int precision) : precision_(precision) {}
  /// Throws InsufficientPrecision if a term sits at or beyond `precision`.
  LaurentSeries(std::map<int, Rational> terms, int precision);

  static LaurentSeries monomial(const Rational& c, int exponent, int precision);

  int precision() const noexcept { return precision_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Least exponent with a nonzero coefficient; throws ZeroSeries.
  int valuation() const;
  /// Coefficient at `exponent`; throws InsufficientPrecision past the
  /// precision.
  Rational coeff(int exponent) const;
  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  std::vector<int> support() const;

  /// "1 + 1/2*t^3 + O(t^10)".
  std::string to_string() const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  std::map<int, Rational> terms_;
  int precision_;
};

inline LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }
inline LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

/// Multiplicative inverse known below `target_precision` (defaults to the
/// largest precision the input supports, N − 2v). Throws ZeroSeries or
/// InsufficientPrecision.
LaurentSeries invert(const LaurentSeries& a, std::optional<int> target_precision = std::nullopt);

/// Whether support(α) ⊆ E, i.e. α lies in the monomial module with value set
/// E. A known coefficient outside E decides `false` at any precision; `true`
/// needs precision >= conductor(E), otherwise InsufficientPrecision.
bool member_of(const LaurentSeries& a, const RelativeIdeal& e);

/// Parses a sum of terms `c*t^e`, `c`, `t^e` or `c*t` with c a rational
/// literal p/q and e an integer (also `t^(-3)`); whitespace is ignored.
std::map<int, Rational> parse_series_terms(std::string_view text);
LaurentSeries parse_series(std::string_view text, int precision);

}  // namespace z2lab
