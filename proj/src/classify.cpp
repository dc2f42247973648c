#include "z2lab/classify.hpp"

#include "z2lab/error.hpp"

namespace z2lab {

std::map<std::string, bool> AgCriteria::as_map() const {
  return {{"e1_at_most_type", e1_at_most_type},
          {"mk_in_r", mk_in_r},
          {"ms_equals_m", ms_equals_m},
          {"mk_equals_m", mk_equals_m},
          {"trace_mk_contains_m", trace_mk_contains_m}};
}

int e1(const NumericalSemigroup& s) {
  return length_quotient(ring_generated_by_K(s), RelativeIdeal::whole(s));
}

AgCriteria ag_criteria(const NumericalSemigroup& s) {
  const auto whole = RelativeIdeal::whole(s);
  const auto m = RelativeIdeal::maximal(s);
  const auto k = canonical_ideal(s);
  const auto mk = product(m, k);
  AgCriteria c;
  c.e1_at_most_type = e1(s) <= s.type();
  c.mk_in_r = mk.is_subset_of(whole);
  c.ms_equals_m = product(m, ring_generated_by_K(s)) == m;
  c.mk_equals_m = mk == m;
  c.trace_mk_contains_m = m.is_subset_of(trace(mk));
  if (!c.agree()) theorem_violation("almost Gorenstein criteria disagree for <" + s.to_string() + ">");
  return c;
}

bool is_almost_gorenstein(const NumericalSemigroup& s) { return ag_criteria(s).mk_equals_m; }

bool nearly_gorenstein(const NumericalSemigroup& s) {
  return RelativeIdeal::maximal(s).is_subset_of(trace(canonical_ideal(s)));
}

bool e1_type_check(const NumericalSemigroup& s) {
  const bool lhs = is_almost_gorenstein(s) && !s.is_symmetric();
  const bool rhs = e1(s) == s.type();
  if (lhs != rhs) theorem_violation("e1 = type does not match non-Gorenstein AG for <" + s.to_string() + ">");
  return true;
}

Classification classify(const NumericalSemigroup& s) {
  const auto m = RelativeIdeal::maximal(s);
  const auto k = canonical_ideal(s);
  Classification out{
      .semigroup = s,
      .criteria = ag_criteria(s),
      .trace_k = trace(k),
      .trace_mk = trace(product(m, k)),
      .ring_k = ring_generated_by_K(s),
  };
  out.type = s.type();
  out.e1 = length_quotient(out.ring_k, RelativeIdeal::whole(s));
  out.multiplicity = s.multiplicity();
  out.embdim = s.embedding_dimension();
  out.almost_gorenstein = out.criteria.mk_equals_m;
  out.nearly_gorenstein = m.is_subset_of(out.trace_k);

  const bool by_type = out.type == 1;
  const bool by_gaps = 2 * static_cast<int>(s.gaps().size()) == s.conductor();
  const bool by_canonical = k == RelativeIdeal::whole(s);
  if (by_type != by_gaps || by_gaps != by_canonical)
    theorem_violation("symmetry tests disagree for <" + s.to_string() + ">");
  out.gorenstein = by_type;

  if (out.gorenstein && !out.almost_gorenstein) theorem_violation("Gorenstein ring is not almost Gorenstein");
  if (out.almost_gorenstein && !out.nearly_gorenstein) theorem_violation("almost Gorenstein ring is not nearly Gorenstein");
  if (!out.trace_mk.is_subset_of(out.trace_k)) theorem_violation("tr(MK) ⊄ tr(K)");
  e1_type_check(s);
  return out;
}

}  // namespace z2lab
