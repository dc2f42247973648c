#pragma once

#include <map>
#include <string>

#include "z2lab/ideal.hpp"
#include "z2lab/semigroup.hpp"

namespace z2lab {

/// The five almost-Gorenstein criteria, evaluated independently in the
/// monomial model.
struct AgCriteria {
  bool e1_at_most_type = false;     // e¹ ≤ r(R)
  bool mk_in_r = false;             // M + K ⊆ S
  bool ms_equals_m = false;         // M + S′ = M
  bool mk_equals_m = false;         // M + K = M
  bool trace_mk_contains_m = false; // M ⊆ tr(M + K)

  bool agree() const noexcept {
    return e1_at_most_type == mk_in_r && mk_in_r == ms_equals_m && ms_equals_m == mk_equals_m &&
           mk_equals_m == trace_mk_contains_m;
  }
  std::map<std::string, bool> as_map() const;
};

struct Classification {
  NumericalSemigroup semigroup;
  bool gorenstein = false;
  bool almost_gorenstein = false;
  bool nearly_gorenstein = false;
  int type = 0;
  int e1 = 0;
  int multiplicity = 0;
  int embdim = 0;
  AgCriteria criteria;
  RelativeIdeal trace_k;
  RelativeIdeal trace_mk;
  RelativeIdeal ring_k;
};

/// #(S′ \ S) with S′ the value set of R[K].
int e1(const NumericalSemigroup& s);

/// Evaluates all five criteria; throws InternalTheoremViolation if they
/// disagree.
AgCriteria ag_criteria(const NumericalSemigroup& s);
bool is_almost_gorenstein(const NumericalSemigroup& s);

/// M ⊆ tr(K).
bool nearly_gorenstein(const NumericalSemigroup& s);

/// (AG and not Gorenstein) ⟺ e¹ = type. Throws InternalTheoremViolation when
/// the two sides differ; returns true otherwise.
bool e1_type_check(const NumericalSemigroup& s);

/// Full classification with every cross-check wired as an assertion.
Classification classify(const NumericalSemigroup& s);

}  // namespace z2lab
