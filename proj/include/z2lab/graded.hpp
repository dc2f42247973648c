#pragma once

#include <optional>
#include <string>

#include "z2lab/error.hpp"
#include "z2lab/ideal.hpp"
#include "z2lab/semigroup.hpp"
#include "z2lab/series.hpp"

namespace z2lab {

/// The element α ∈ 𝔪:𝔪² defining φ(x,y) = αxy.
struct Alpha {
  enum class Kind { Zero, Monomial, Series };
  Kind kind = Kind::Zero;
  int v = 0;  // exponent when kind == Monomial
  std::optional<LaurentSeries> series;

  static Alpha zero() { return {}; }
  static Alpha monomial(int v) { return {Kind::Monomial, v, std::nullopt}; }
  static Alpha from_series(LaurentSeries s) { return {Kind::Series, 0, std::move(s)}; }

  std::string to_string() const;
};

/// A = R ×_φ 𝔪 for R = k[[t^S]], with the value sets B = M − M, K and
/// M2 = M − (M + M) cached.
class GradedIdealization {
 public:
  /// Throws NotAdmissible when α ∉ 𝔪:𝔪², InsufficientPrecision when a series
  /// is too short to decide.
  static GradedIdealization make(const NumericalSemigroup& s, Alpha alpha);

  const NumericalSemigroup& base() const noexcept { return s_; }
  const Alpha& alpha() const noexcept { return alpha_; }
  const RelativeIdeal& m() const noexcept { return m_; }
  const RelativeIdeal& b() const noexcept { return b_; }
  const RelativeIdeal& k() const noexcept { return k_; }
  const RelativeIdeal& m2() const noexcept { return m2_; }
  bool is_monomial() const noexcept { return alpha_.kind == Alpha::Kind::Monomial; }

 private:
  GradedIdealization(NumericalSemigroup s, Alpha alpha);
  NumericalSemigroup s_;
  Alpha alpha_;
  RelativeIdeal m_, b_, k_, m2_;
};

/// M − (M + M).
RelativeIdeal m_colon_m2(const NumericalSemigroup& s);
/// M − M.
RelativeIdeal ring_b(const NumericalSemigroup& s);

/// Precision v + conductor(B) + 8 for a series with valuation v.
int default_precision(const NumericalSemigroup& s, int valuation);

/// ag(S) and (α ∈ B or α⁻¹ ∈ B); ag(S) for α = 0. Throws DvrNotCovered or
/// InsufficientPrecision.
bool is_ag(const GradedIdealization& a);

struct Condition2 {
  RelativeIdeal trace;   // tr_B(B ∪ (v + B))
  bool trace_is_b = false;
  bool holds = false;    // ag(S) and trace_is_b
};
/// Throws NonMonomialAlpha for series α, DvrNotCovered on S = ℕ. α = 0 uses
/// X = B.
Condition2 ag_condition2(const GradedIdealization& a);

struct TraceFormula {
  RelativeIdeal t;  // M + tr_B((B ∪ (v + B)) + K)
  bool equals_m = false;
};
TraceFormula ag_trace_formula(const GradedIdealization& a);

/// S = ℕ: always true. Otherwise S symmetric and α⁻¹ ∈ 𝔪; for α = 0, 𝔪 ≅ K.
bool is_gorenstein_A(const GradedIdealization& a);

/// #((K−M) ∖ ((M+K) ∪ (v+M+K))) + #(K ∖ (M+K)); the v-term is dropped for
/// α = 0.
int cm_type_A(const GradedIdealization& a);

/// #(M ∖ ((M+M) ∪ (v+M+M))) + μ(M); the v-term is dropped for α = 0.
int embdim_A(const GradedIdealization& a);

/// S = ℕ and v = −1.
bool is_regular_A(const GradedIdealization& a);

/// The value semigroup 2S ∪ (2M + v) of A for odd v. Throws EvenShift or
/// NotAdmissible.
NumericalSemigroup semigroup_model(const NumericalSemigroup& s, int v);

/// v + E = S − E for a non-principal monomial ideal E of a symmetric S.
bool good_shift_check(const NumericalSemigroup& s, const RelativeIdeal& e, int v);

struct GoodIdeal {
  RelativeIdeal e;
  int a = 0;
};
/// E = S − T together with a ∈ min_gens(E) such that E + E = a + E and
/// E = a + (S − E).
GoodIdeal good_ideal(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Everything known about one instance, with the cross-theorem assertions
/// applied. Optional fields are empty where an invariant is not defined
/// (DVR base for ag, series α for the set-level invariants, even shift for
/// the semigroup model).
struct IdealizationReport {
  NumericalSemigroup semigroup;
  Alpha alpha;
  bool admissible = false;
  std::optional<bool> ag;
  std::optional<bool> gorenstein;
  std::optional<int> cm_type;
  std::optional<int> embdim;
  std::optional<bool> regular;
  std::optional<bool> condition2;
  std::optional<bool> trace_formula;
  bool oracle_used = false;
  std::optional<bool> oracle_agrees;
  std::optional<ErrorCode> failure;  // precondition that cut the analysis short
  std::string note;
};

/// Builds and analyzes A. Precondition failures are recorded in `failure`
/// rather than thrown. Throws InternalTheoremViolation when two computations
/// of the same invariant disagree; disagreement with the semigroup model is
/// only recorded in `oracle_agrees`.
IdealizationReport analyze(const NumericalSemigroup& s, const Alpha& alpha);

}  // namespace z2lab
