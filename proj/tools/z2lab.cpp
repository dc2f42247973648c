#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "z2lab/classify.hpp"
#include "z2lab/error.hpp"
#include "z2lab/graded.hpp"
#include "z2lab/oracle.hpp"
#include "z2lab/serialize.hpp"
#include "z2lab/sweep.hpp"

using namespace z2lab;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kInternal = 3 };

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

NumericalSemigroup semigroup_arg(const std::string& text) {
  return NumericalSemigroup::from_generators(parse_int_list(text));
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

int cmd_info(const std::string& gens) {
  const auto s = semigroup_arg(gens);
  const auto c = classify(s);
  std::cout << "semigroup      <" << s.to_string() << ">\n"
            << "frobenius      " << s.frobenius() << '\n'
            << "conductor      " << s.conductor() << '\n'
            << "multiplicity   " << s.multiplicity() << '\n'
            << "embdim         " << s.embedding_dimension() << '\n'
            << "genus          " << s.gaps().size() << '\n'
            << "gaps           " << join(s.gaps()) << '\n'
            << "pseudo-frob    " << join(s.pseudo_frobenius()) << '\n'
            << "type           " << c.type << '\n'
            << "e1             " << c.e1 << '\n'
            << "gorenstein     " << std::boolalpha << c.gorenstein << '\n'
            << "almost gor     " << c.almost_gorenstein << '\n'
            << "nearly gor     " << c.nearly_gorenstein << '\n'
            << "K              " << canonical_ideal(s).to_string() << '\n'
            << "tr(K)          " << c.trace_k.to_string() << '\n';
  return kOk;
}

int cmd_classify(const std::string& gens) {
  print(to_json(classify(semigroup_arg(gens))));
  return kOk;
}

struct AlphaOpts {
  std::optional<int> mono;
  std::optional<std::string> series;
  bool zero = false;
  std::optional<int> precision;
};

int cmd_idealize(const std::string& gens, const AlphaOpts& o) {
  const auto s = semigroup_arg(gens);
  const int chosen = (o.mono ? 1 : 0) + (o.series ? 1 : 0) + (o.zero ? 1 : 0);
  if (chosen != 1) {
    std::cerr << "idealize: give exactly one of --alpha-mono, --alpha-series, --alpha-zero\n";
    return kUsage;
  }
  Alpha alpha;
  if (o.mono) {
    alpha = Alpha::monomial(*o.mono);
  } else if (o.series) {
    const auto terms = parse_series_terms(*o.series);
    if (terms.empty()) fail(ErrorCode::ZeroSeries, "alpha series is zero");
    const int prec = o.precision ? *o.precision : default_precision(s, terms.begin()->first);
    alpha = Alpha::from_series(LaurentSeries(terms, prec));
  }
  const auto report = analyze(s, alpha);
  print(to_json(report));
  if (report.failure) return kPrecondition;
  if (report.oracle_agrees && !*report.oracle_agrees) return kInternal;
  return kOk;
}

Json algebra_summary(const FiniteAlgebra& a) {
  return Json{{"dim", a.dim()}, {"socle_dim", a.socle().dim()}, {"cm_type", a.cm_type()}, {"gorenstein", a.is_gorenstein()}};
}

int cmd_artinian(const std::vector<std::string>& preset, const std::string& input) {
  if (preset.empty() == input.empty()) {
    std::cerr << "artinian: give exactly one of --preset or --input\n";
    return kUsage;
  }
  Json out;
  if (!preset.empty()) {
    if (preset.size() != 4 || preset[0] != "quadratic") {
      std::cerr << "artinian: --preset quadratic a b c\n";
      return kUsage;
    }
    const auto g = preset_quadratic(parse_rational(preset[1]), parse_rational(preset[2]), parse_rational(preset[3]));
    out = algebra_summary(g.algebra);
    out["preset"] = Json{{"name", "quadratic"}, {"a", preset[1]}, {"b", preset[2]}, {"c", preset[3]}};
    out["theorem"] = to_json(gorenstein_dichotomy(g.base, g.module, g.phi));
  } else {
    std::ifstream in(input);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, std::string("algebra json: ") + e.what());
    }
    const auto data = artinian_from_json(j);
    const auto a = idealize(data.algebra, data.module, data.phi);
    out = algebra_summary(a);
    out["base"] = algebra_summary(data.algebra);
    out["module_dim"] = data.module.dim();
    out["theorem"] = to_json(gorenstein_dichotomy(data.algebra, data.module, data.phi));
  }
  print(out);
  return kOk;
}

int cmd_sweep(SweepSpec spec, const std::string& list, std::optional<int> gen_bound, std::optional<int> max_embdim,
              std::optional<int> amin, std::optional<int> amax, const std::string& output) {
  if (!list.empty() == (gen_bound.has_value() || max_embdim.has_value())) {
    std::cerr << "sweep: give either --list or --gen-bound with --max-embdim\n";
    return kUsage;
  }
  if (!list.empty()) {
    std::size_t start = 0;
    while (start <= list.size()) {
      const auto end = list.find(';', start);
      const auto item = list.substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!item.empty()) spec.explicit_list.push_back(parse_int_list(item));
      if (end == std::string::npos) break;
      start = end + 1;
    }
  } else {
    if (!gen_bound || !max_embdim || *gen_bound < 2 || *max_embdim < 1) {
      std::cerr << "sweep: bounds must be positive (gen-bound >= 2)\n";
      return kUsage;
    }
    spec.bounds = std::pair{*gen_bound, *max_embdim};
  }
  if (amin.has_value() != amax.has_value()) {
    std::cerr << "sweep: give both --alpha-min and --alpha-max\n";
    return kUsage;
  }
  if (amin) {
    if (*amin > *amax) {
      std::cerr << "sweep: empty alpha range\n";
      return kUsage;
    }
    spec.alpha_range = std::pair{*amin, *amax};
  }
  spec.workers = workers_from_env(spec.workers);
  const auto result = run_sweep(spec);
  if (output.empty() || output == "-") {
    std::cout << result.text;
  } else {
    std::ofstream out(output, std::ios::binary);
    out << result.text;
    if (!out) fail(ErrorCode::ParseError, "cannot write " + output);
    std::cerr << result.rows << " rows written to " << output << '\n';
  }
  if (result.violations > 0) {
    std::cerr << result.violations << " violations\n";
    return kInternal;
  }
  return kOk;
}

// Brute-force recomputation from explicit sets and dense tables, diffed
// against the library.
int cmd_oracle_classify(const std::string& gens) {
  const auto s = semigroup_arg(gens);
  const auto c = classify(s);
  const auto o = oracle::classify(s.generators());
  Json diff{{"frobenius", {s.frobenius(), o.frobenius}},
            {"type", {c.type, o.type}},
            {"embdim", {c.embdim, o.embdim}},
            {"e1", {c.e1, o.e1}},
            {"gor", {c.gorenstein, o.symmetric}},
            {"ag", {c.almost_gorenstein, o.almost_gorenstein}},
            {"ng", {c.nearly_gorenstein, o.nearly_gorenstein}}};
  bool agree = true;
  for (const auto& [k, v] : diff.items()) agree = agree && v[0] == v[1];
  print(Json{{"semigroup", s.to_string()}, {"fields", diff}, {"agree", agree}});
  return agree ? kOk : kInternal;
}

int cmd_oracle_idealize(const std::string& gens, std::optional<int> v) {
  const auto s = semigroup_arg(gens);
  const auto report = analyze(s, v ? Alpha::monomial(*v) : Alpha::zero());
  if (report.failure) {
    print(to_json(report));
    return kPrecondition;
  }
  const auto o = oracle::graded_pair_model(s.generators(), v);
  Json diff{{"ag", {*report.ag, o.almost_gorenstein}},
            {"gorenstein", {*report.gorenstein, o.gorenstein}},
            {"cm_type", {*report.cm_type, o.type}},
            {"embdim", {*report.embdim, o.embdim}}};
  bool agree = true;
  for (const auto& [k, val] : diff.items()) agree = agree && val[0] == val[1];
  Json out{{"semigroup", s.to_string()}, {"alpha", to_json(report.alpha)}, {"fields", diff}};
  if (report.oracle_agrees) out["semigroup_model_agrees"] = *report.oracle_agrees;
  agree = agree && report.oracle_agrees.value_or(true);
  out["agree"] = agree;
  print(out);
  return agree ? kOk : kInternal;
}

int cmd_oracle_artinian(const std::vector<std::string>& preset) {
  if (preset.size() != 4 || preset[0] != "quadratic") {
    std::cerr << "oracle artinian: --preset quadratic a b c\n";
    return kUsage;
  }
  const auto g = preset_quadratic(parse_rational(preset[1]), parse_rational(preset[2]), parse_rational(preset[3]));
  const auto& a = g.algebra;
  oracle::Table t(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) t[static_cast<std::size_t>(i)].push_back(a.product(i, j));
  const int dense = oracle::socle_dim(t);
  const bool agree = dense == a.cm_type();
  print(Json{{"socle_dim", {a.cm_type(), dense}}, {"agree", agree}});
  return agree ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein-type properties of numerical semigroup rings and their graded idealizations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string gens;
  auto* info = app.add_subcommand("info", "semigroup invariants and classification");
  info->add_option("generators", gens, "e.g. 3,4,5")->required();

  auto* cls = app.add_subcommand("classify", "classification as JSON");
  cls->add_option("generators", gens)->required();

  AlphaOpts alpha;
  auto* ide = app.add_subcommand("idealize", "analyze the graded idealization of the maximal ideal");
  ide->add_option("generators", gens)->required();
  ide->add_option("--alpha-mono", alpha.mono, "alpha = t^v");
  ide->add_option("--alpha-series", alpha.series, "alpha as a Laurent series, e.g. \"1+1*t^3\"");
  ide->add_flag("--alpha-zero", alpha.zero, "alpha = 0");
  ide->add_option("--precision", alpha.precision, "series precision");

  std::vector<std::string> preset;
  std::string input;
  auto* art = app.add_subcommand("artinian", "finite-dimensional idealization report");
  art->add_option("--preset", preset, "quadratic a b c")->expected(4);
  art->add_option("--input", input, "JSON algebra file");

  SweepSpec spec;
  std::string list, output;
  std::optional<int> gen_bound, max_embdim, amin, amax;
  auto* sw = app.add_subcommand("sweep", "classify or idealize a family");
  sw->add_option("--gen-bound", gen_bound, "largest generator");
  sw->add_option("--max-embdim", max_embdim, "largest generating set");
  sw->add_option("--list", list, "semigroups separated by ';', e.g. \"3,4,5;4,7,9\"");
  sw->add_option("--alpha-min", amin);
  sw->add_option("--alpha-max", amax);
  sw->add_flag("--odd-only", spec.odd_only);
  sw->add_option("--output", output, "file path, or - for stdout");
  sw->add_option("--format", spec.format)->check(CLI::IsMember({"csv", "json"}));
  sw->add_option("--workers", spec.workers)->check(CLI::PositiveNumber);

  auto* orc = app.add_subcommand("oracle", "brute-force recomputation diffed against the library");
  orc->require_subcommand(1);
  auto* ocls = orc->add_subcommand("classify");
  ocls->add_option("generators", gens)->required();
  std::optional<int> ov;
  auto* oide = orc->add_subcommand("idealize");
  oide->add_option("generators", gens)->required();
  oide->add_option("--alpha-mono", ov, "omit for alpha = 0");
  auto* oart = orc->add_subcommand("artinian");
  oart->add_option("--preset", preset)->expected(4)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(gens);
    if (*cls) return cmd_classify(gens);
    if (*ide) return cmd_idealize(gens, alpha);
    if (*art) return cmd_artinian(preset, input);
    if (*sw) return cmd_sweep(spec, list, gen_bound, max_embdim, amin, amax, output);
    if (*ocls) return cmd_oracle_classify(gens);
    if (*oide) return cmd_oracle_idealize(gens, ov);
    if (*oart) return cmd_oracle_artinian(preset);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kInternal : kPrecondition;
  }
  return kUsage;
}
