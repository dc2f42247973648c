#include "z2lab/serialize.hpp"

#include "z2lab/error.hpp"

namespace z2lab {

Json to_json(const NumericalSemigroup& s) {
  return Json{{"generators", s.generators()}, {"frobenius", s.frobenius()}, {"gaps", s.gaps()}, {"type", s.type()}};
}

Json to_json(const RelativeIdeal& e) {
  return Json{{"base", e.base().generators()},
              {"members_below_conductor", e.members_below_conductor()},
              {"conductor", e.conductor()}};
}

Json to_json(const Classification& c) {
  Json criteria = Json::object();
  for (const auto& [name, value] : c.criteria.as_map()) criteria[name] = value;
  return Json{{"semigroup", to_json(c.semigroup)},
              {"gor", c.gorenstein},
              {"ag", c.almost_gorenstein},
              {"ng", c.nearly_gorenstein},
              {"type", c.type},
              {"e1", c.e1},
              {"multiplicity", c.multiplicity},
              {"embdim", c.embdim},
              {"criteria", criteria},
              {"trace_k", to_json(c.trace_k)},
              {"trace_mk", to_json(c.trace_mk)},
              {"ring_k", to_json(c.ring_k)}};
}

Json to_json(const LaurentSeries& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.terms())
    terms.push_back(Json{{"exp", e}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return Json{{"terms", terms}, {"precision", a.precision()}};
}

LaurentSeries series_from_json(const Json& j) {
  try {
    std::map<int, Rational> terms;
    for (const auto& t : j.at("terms")) {
      auto text = [](const Json& x) { return x.is_string() ? x.get<std::string>() : std::to_string(x.get<long long>()); };
      terms[t.at("exp").get<int>()] += parse_rational(text(t.at("num")) + "/" + text(t.at("den")));
    }
    return LaurentSeries(std::move(terms), j.at("precision").get<int>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("series json: ") + e.what());
  }
}

Json to_json(const Alpha& a) {
  switch (a.kind) {
    case Alpha::Kind::Zero: return Json{{"kind", "zero"}};
    case Alpha::Kind::Monomial: return Json{{"kind", "monomial"}, {"v", a.v}};
    case Alpha::Kind::Series: return Json{{"kind", "series"}, {"series", to_json(*a.series)}, {"text", a.series->to_string()}};
  }
  return Json();
}

namespace {

template <typename T>
Json opt(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json to_json(const IdealizationReport& r) {
  Json j{{"semigroup", to_json(r.semigroup)},
         {"alpha", to_json(r.alpha)},
         {"admissible", r.admissible},
         {"ag", opt(r.ag)},
         {"gorenstein", opt(r.gorenstein)},
         {"cm_type", opt(r.cm_type)},
         {"embdim", opt(r.embdim)},
         {"regular", opt(r.regular)},
         {"condition2", opt(r.condition2)},
         {"trace_formula", opt(r.trace_formula)},
         {"oracle_used", r.oracle_used},
         {"oracle_agrees", opt(r.oracle_agrees)}};
  if (r.failure) {
    j["error"] = std::string(error_name(*r.failure));
    j["note"] = r.note;
  }
  return j;
}

Json to_json(const DichotomyReport& r) {
  return Json{{"gorenstein", r.gorenstein_a},
              {"cm_type", r.cm_type_a},
              {"faithful", r.faithful},
              {"module_socle_dim", r.module_socle_dim},
              {"cm_type_base", r.cm_type_r},
              {"m_phi_dim", r.m_phi_dim},
              {"branch_canonical_module", r.branch_canonical},
              {"branch_gorenstein_base_trivial_radical", r.branch_radical}};
}

namespace {

Rational rational_field(const Json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return Rational(x.get<long>());
  fail(ErrorCode::ParseError, "coefficient must be an integer or a \"p/q\" string");
}

int index_field(const Json& x, int bound, const char* what) {
  if (!x.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " index must be an integer");
  const int i = x.get<int>();
  if (i < 0 || i >= bound) fail(ErrorCode::ParseError, std::string(what) + " index out of range");
  return i;
}

}  // namespace

ArtinianInput artinian_from_json(const Json& j) {
  try {
    const auto labels = j.at("basis").get<std::vector<std::string>>();
    const int n = static_cast<int>(labels.size());
    if (n == 0) fail(ErrorCode::ParseError, "basis is empty");
    std::vector<std::vector<Vec>> table(static_cast<std::size_t>(n), std::vector<Vec>(static_cast<std::size_t>(n), zero_vec(n)));
    std::vector<std::vector<char>> given(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      table[0][static_cast<std::size_t>(i)] = unit_vec(n, i);
      table[static_cast<std::size_t>(i)][0] = unit_vec(n, i);
    }
    for (const auto& e : j.value("structure_constants", Json::array())) {
      if (e.size() != 4) fail(ErrorCode::ParseError, "structure constant entries are [i,j,k,q]");
      const int a = index_field(e[0], n, "structure"), b = index_field(e[1], n, "structure");
      const int k = index_field(e[2], n, "structure");
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] = rational_field(e[3]);
      given[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (given[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && !given[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
          table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    FiniteAlgebra r = FiniteAlgebra::create(labels, std::move(table));

    const int s = j.value("module_dim", 0);
    if (s < 0) fail(ErrorCode::ParseError, "module_dim must be nonnegative");
    std::vector<Matrix> actions(static_cast<std::size_t>(n), Matrix(s, s));
    actions[0] = Matrix::identity(s);
    for (const auto& e : j.value("module_actions", Json::array())) {
      if (e.size() != 4) fail(ErrorCode::ParseError, "module action entries are [i,row,col,q]");
      const int i = index_field(e[0], n, "action");
      actions[static_cast<std::size_t>(i)](index_field(e[1], s, "action row"), index_field(e[2], s, "action column")) =
          rational_field(e[3]);
    }
    FiniteModule m = FiniteModule::create(r, std::move(actions));

    std::vector<std::vector<Vec>> values(static_cast<std::size_t>(s), std::vector<Vec>(static_cast<std::size_t>(s), zero_vec(n)));
    std::vector<std::vector<char>> set(static_cast<std::size_t>(s), std::vector<char>(static_cast<std::size_t>(s), 0));
    for (const auto& e : j.value("phi_values", Json::array())) {
      if (e.size() != 4) fail(ErrorCode::ParseError, "phi entries are [i,j,k,q]");
      const int a = index_field(e[0], s, "phi"), b = index_field(e[1], s, "phi");
      values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(index_field(e[2], n, "phi"))] =
          rational_field(e[3]);
      set[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    }
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (set[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && !set[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
          values[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    BilinearForm phi = BilinearForm::create(r, m, std::move(values));
    return ArtinianInput{std::move(r), std::move(m), std::move(phi)};
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("algebra json: ") + e.what());
  }
}

}  // namespace z2lab
