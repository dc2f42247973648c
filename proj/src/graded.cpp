#include "z2lab/graded.hpp"

#include <algorithm>
#include <cstdlib>

#include "z2lab/classify.hpp"
#include "z2lab/error.hpp"

namespace z2lab {

std::string Alpha::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Monomial: return "t^" + std::to_string(v);
    case Kind::Series: return series->to_string();
  }
  return "";
}

RelativeIdeal m_colon_m2(const NumericalSemigroup& s) {
  const auto m = RelativeIdeal::maximal(s);
  return colon(m, product(m, m));
}

RelativeIdeal ring_b(const NumericalSemigroup& s) {
  const auto m = RelativeIdeal::maximal(s);
  return colon(m, m);
}

int default_precision(const NumericalSemigroup& s, int valuation) {
  return valuation + ring_b(s).conductor() + 8;
}

GradedIdealization::GradedIdealization(NumericalSemigroup s, Alpha alpha)
    : s_(std::move(s)),
      alpha_(std::move(alpha)),
      m_(RelativeIdeal::maximal(s_)),
      b_(colon(m_, m_)),
      k_(canonical_ideal(s_)),
      m2_(colon(m_, product(m_, m_))) {}

GradedIdealization GradedIdealization::make(const NumericalSemigroup& s, Alpha alpha) {
  GradedIdealization a(s, std::move(alpha));
  switch (a.alpha_.kind) {
    case Alpha::Kind::Zero: break;
    case Alpha::Kind::Monomial:
      if (!a.m2_.contains(a.alpha_.v))
        fail(ErrorCode::NotAdmissible, "t^" + std::to_string(a.alpha_.v) + " is not in m:m^2");
      break;
    case Alpha::Kind::Series:
      if (!member_of(*a.alpha_.series, a.m2_)) fail(ErrorCode::NotAdmissible, "series support leaves m:m^2");
      break;
  }
  return a;
}

namespace {

void require_not_dvr(const GradedIdealization& a) {
  if (a.base().is_naturals()) fail(ErrorCode::DvrNotCovered, "base ring is a discrete valuation ring");
}

int monomial_exponent(const GradedIdealization& a) {
  if (a.alpha().kind == Alpha::Kind::Series) fail(ErrorCode::NonMonomialAlpha, "needs a monomial alpha");
  return a.alpha().v;
}

// membership that reports undecidable precision instead of throwing
std::optional<bool> try_member(const LaurentSeries& x, const RelativeIdeal& e) {
  try {
    return member_of(x, e);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::InsufficientPrecision) throw;
    return std::nullopt;
  }
}

RelativeIdeal b_trace(const RelativeIdeal& b, const RelativeIdeal& y) { return product(y, colon(b, y)); }

RelativeIdeal one_alpha(const GradedIdealization& a) {
  if (a.alpha().kind == Alpha::Kind::Zero) return a.b();
  return sum_ideal(a.b(), a.b().shifted(monomial_exponent(a)));
}

}  // namespace

bool is_ag(const GradedIdealization& a) {
  require_not_dvr(a);
  const bool ag_r = is_almost_gorenstein(a.base());
  switch (a.alpha().kind) {
    case Alpha::Kind::Zero: return ag_r;
    case Alpha::Kind::Monomial: return ag_r && (a.b().contains(a.alpha().v) || a.b().contains(-a.alpha().v));
    case Alpha::Kind::Series: {
      if (!ag_r) return false;
      const LaurentSeries& x = *a.alpha().series;
      const auto direct = try_member(x, a.b());
      if (direct == true) return true;
      const auto inverse = try_member(invert(x), a.b());
      if (inverse == true) return true;
      if (direct && inverse) return false;
      fail(ErrorCode::InsufficientPrecision, "series too short to decide membership in m:m");
    }
  }
  return false;
}

Condition2 ag_condition2(const GradedIdealization& a) {
  require_not_dvr(a);
  const RelativeIdeal x = one_alpha(a);
  Condition2 c{b_trace(a.b(), x), false, false};
  c.trace_is_b = c.trace == a.b();
  c.holds = c.trace_is_b && is_almost_gorenstein(a.base());
  return c;
}

TraceFormula ag_trace_formula(const GradedIdealization& a) {
  require_not_dvr(a);
  const RelativeIdeal y = product(one_alpha(a), a.k());
  TraceFormula f{product(a.m(), b_trace(a.b(), y)), false};
  f.equals_m = f.t == a.m();
  return f;
}

bool is_gorenstein_A(const GradedIdealization& a) {
  const NumericalSemigroup& s = a.base();
  if (s.is_naturals()) return true;
  switch (a.alpha().kind) {
    case Alpha::Kind::Zero: return a.m().is_translate_of(a.k());
    case Alpha::Kind::Monomial: {
      const int v = a.alpha().v;
      const bool gor = s.is_symmetric() && a.m().contains(-v);
      if (gor && (s.multiplicity() != 2 || product(a.m(), a.m()) != a.m().shifted(-v)))
        theorem_violation("Gorenstein idealization over <" + s.to_string() + "> without m^2 = alpha^-1 m");
      return gor;
    }
    case Alpha::Kind::Series: {
      const bool gor = s.is_symmetric() && member_of(invert(*a.alpha().series), a.m());
      if (gor && s.multiplicity() != 2)
        theorem_violation("Gorenstein idealization over <" + s.to_string() + "> with multiplicity not 2");
      return gor;
    }
  }
  return false;
}

int cm_type_A(const GradedIdealization& a) {
  require_not_dvr(a);
  const int v = monomial_exponent(a);
  const RelativeIdeal mk = product(a.m(), a.k());
  RelativeIdeal first = mk;
  if (a.alpha().kind == Alpha::Kind::Monomial) first = sum_ideal(mk, mk.shifted(v));
  const RelativeIdeal hom = colon(a.k(), a.m());
  const RelativeIdeal bracket = intersect(first, hom);
  return length_quotient(hom, bracket) + length_quotient(a.k(), mk);
}

int embdim_A(const GradedIdealization& a) {
  const int v = monomial_exponent(a);
  const RelativeIdeal mm = product(a.m(), a.m());
  RelativeIdeal phi = mm;
  if (a.alpha().kind == Alpha::Kind::Monomial) phi = sum_ideal(mm, mm.shifted(v));
  return length_quotient(a.m(), intersect(phi, a.m())) + mu(a.m());
}

bool is_regular_A(const GradedIdealization& a) {
  const int v = monomial_exponent(a);
  return a.base().is_naturals() && a.alpha().kind == Alpha::Kind::Monomial && v == -1;
}

NumericalSemigroup semigroup_model(const NumericalSemigroup& s, int v) {
  if (v % 2 == 0) fail(ErrorCode::EvenShift, "the value-set model needs an odd shift, got " + std::to_string(v));
  const auto m = RelativeIdeal::maximal(s);
  if (!m_colon_m2(s).contains(v)) fail(ErrorCode::NotAdmissible, "t^" + std::to_string(v) + " is not in m:m^2");
  const int bound = 2 * s.conductor() + std::abs(v) + 2;
  return NumericalSemigroup::from_members(
      [&](int z) {
        if (z % 2 == 0) return s.contains(z / 2);
        const int w = z - v;  // even
        return w > 0 && m.contains(w / 2);
      },
      bound);
}

bool good_shift_check(const NumericalSemigroup& s, const RelativeIdeal& e, int v) {
  if (!s.is_symmetric()) fail(ErrorCode::NotGorensteinBase, "<" + s.to_string() + "> is not symmetric");
  const auto whole = RelativeIdeal::whole(s);
  if (!(e.contains(0) && e.is_subset_of(whole)) && !e.is_subset_of(RelativeIdeal::maximal(s)))
    fail(ErrorCode::NotContained, "ideal must satisfy 0 in E inside S, or E inside M");
  if (e.is_translate_of(whole)) fail(ErrorCode::IdealIsPrincipal, "E is isomorphic to S");
  return e.shifted(v) == colon(whole, e);
}

GoodIdeal good_ideal(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  if (!s.is_symmetric()) fail(ErrorCode::NotSymmetricBase, "<" + s.to_string() + "> is not symmetric");
  if (!t.is_symmetric()) fail(ErrorCode::NotSymmetric, "<" + t.to_string() + "> is not symmetric");
  bool contains_s = true;
  for (int z = 0; z < std::max(s.conductor(), t.conductor()) && contains_s; ++z) contains_s = !s.contains(z) || t.contains(z);
  if (!contains_s || t == s) fail(ErrorCode::InvalidExtension, "T must strictly contain S");
  const auto whole = RelativeIdeal::whole(s);
  const auto t_ideal = RelativeIdeal::from_window(s, 0, t.conductor(), [&](int z) { return t.contains(z); });
  const RelativeIdeal e = colon(whole, t_ideal);
  const RelativeIdeal ee = product(e, e);
  const RelativeIdeal dual = colon(whole, e);
  for (int a : min_gens(e))
    if (ee == e.shifted(a) && e == dual.shifted(a)) return GoodIdeal{e, a};
  theorem_violation("no reduction a with E^2 = aE and E = a(S-E) for S = <" + s.to_string() + ">, T = <" +
                    t.to_string() + ">");
}

IdealizationReport analyze(const NumericalSemigroup& s, const Alpha& alpha) {
  IdealizationReport rep{.semigroup = s, .alpha = alpha};
  std::optional<GradedIdealization> a;
  try {
    a = GradedIdealization::make(s, alpha);
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    rep.failure = e.code();
    rep.note = e.what();
    return rep;
  }
  rep.admissible = true;
  try {
    rep.gorenstein = is_gorenstein_A(*a);
    if (!alpha.series) {
      rep.embdim = embdim_A(*a);
      rep.regular = is_regular_A(*a);
      if (*rep.regular != (*rep.embdim == 1)) theorem_violation("regularity differs from embedding dimension 1");
    }
    rep.ag = is_ag(*a);
    if (!alpha.series) {
      const Condition2 c2 = ag_condition2(*a);
      const TraceFormula tf = ag_trace_formula(*a);
      rep.condition2 = c2.holds;
      rep.trace_formula = tf.equals_m;
      if (alpha.kind == Alpha::Kind::Monomial &&
          c2.trace_is_b != (a->b().contains(alpha.v) || a->b().contains(-alpha.v)))
        theorem_violation("tr_B(<1,alpha>) = B differs from alpha or its inverse lying in B");
      if (c2.holds != *rep.ag || tf.equals_m != *rep.ag)
        theorem_violation("almost Gorenstein tests for the idealization disagree");
      rep.cm_type = cm_type_A(*a);
      if ((*rep.cm_type == 1) != *rep.gorenstein) theorem_violation("type 1 differs from the Gorenstein test");
    }
  } catch (const Error& e) {
    if (is_internal(e.code())) throw;
    rep.failure = e.code();
    rep.note = e.what();
  }
  if (alpha.kind == Alpha::Kind::Monomial && alpha.v % 2 != 0) {
    const NumericalSemigroup model = semigroup_model(s, alpha.v);
    rep.oracle_used = true;
    bool agrees = true;
    if (rep.ag) agrees = agrees && *rep.ag == is_almost_gorenstein(model);
    if (rep.gorenstein) agrees = agrees && *rep.gorenstein == model.is_symmetric();
    if (rep.cm_type) agrees = agrees && *rep.cm_type == model.type();
    if (rep.embdim) agrees = agrees && *rep.embdim == model.embedding_dimension();
    rep.oracle_agrees = agrees;
  }
  return rep;
}

}  // namespace z2lab
