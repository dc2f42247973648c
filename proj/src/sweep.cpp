#include "z2lab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "z2lab/classify.hpp"
#include "z2lab/error.hpp"
#include "z2lab/graded.hpp"
#include "z2lab/serialize.hpp"

namespace z2lab {

std::vector<NumericalSemigroup> enumerate_family(int gen_bound, int max_size) {
  std::map<std::vector<int>, NumericalSemigroup> by_gaps;
  std::vector<int> current;
  auto visit = [&](auto&& self, int next) -> void {
    if (!current.empty()) {
      int g = 0;
      for (int x : current) g = std::gcd(g, x);
      if (g == 1) {
        auto s = NumericalSemigroup::from_generators(current);
        by_gaps.emplace(s.gaps(), s);
      }
    }
    if (static_cast<int>(current.size()) == max_size) return;
    for (int x = next; x <= gen_bound; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  visit(visit, 2);
  std::vector<NumericalSemigroup> out;
  for (auto& [gaps, s] : by_gaps) out.push_back(s);
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.generators() < b.generators(); });
  return out;
}

int workers_from_env(int fallback) {
  if (const char* env = std::getenv("Z2LAB_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return fallback;
}

namespace {

struct Row {
  std::vector<int> generators;
  int v = 0;
  std::string csv;
  Json json;
  bool violation = false;
};

std::string b(bool x) { return x ? "true" : "false"; }

template <typename T>
std::string opt_csv(const std::optional<T>& x) {
  if (!x) return "";
  if constexpr (std::is_same_v<T, bool>) return b(*x);
  else return std::to_string(*x);
}

std::string quoted(const NumericalSemigroup& s) { return "\"" + s.to_string() + "\""; }

Row classification_row(const NumericalSemigroup& s) {
  Row row{s.generators(), 0, {}, {}, false};
  try {
    const Classification c = classify(s);
    row.csv = quoted(s) + "," + std::to_string(s.frobenius()) + "," + std::to_string(c.type) + "," +
              std::to_string(c.e1) + "," + b(c.gorenstein) + "," + b(c.almost_gorenstein) + "," +
              b(c.nearly_gorenstein);
    row.json = to_json(c);
  } catch (const Error& e) {
    row.violation = true;
    row.csv = quoted(s) + "," + std::to_string(s.frobenius()) + ",,,,,";
    row.json = Json{{"semigroup", to_json(s)}, {"error", e.what()}};
  }
  return row;
}

std::optional<Row> idealization_row(const NumericalSemigroup& s, int v) {
  if (!m_colon_m2(s).contains(v)) return std::nullopt;
  Row row{s.generators(), v, {}, {}, false};
  try {
    const IdealizationReport r = analyze(s, Alpha::monomial(v));
    row.violation = r.oracle_agrees == false;
    row.csv = quoted(s) + "," + std::to_string(v) + "," + opt_csv(r.ag) + "," + opt_csv(r.gorenstein) + "," +
              opt_csv(r.cm_type) + "," + opt_csv(r.embdim) + "," + opt_csv(r.regular) + "," + opt_csv(r.oracle_agrees);
    row.json = to_json(r);
  } catch (const Error& e) {
    row.violation = true;
    row.csv = quoted(s) + "," + std::to_string(v) + ",,,,,,";
    row.json = Json{{"semigroup", to_json(s)}, {"alpha", Json{{"kind", "monomial"}, {"v", v}}}, {"error", e.what()}};
  }
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  std::vector<NumericalSemigroup> family;
  if (spec.bounds) {
    if (spec.bounds->first < 2 || spec.bounds->second < 1)
      fail(ErrorCode::ParseError, "family bounds must be positive");
    family = enumerate_family(spec.bounds->first, spec.bounds->second);
  }
  for (const auto& gens : spec.explicit_list) family.push_back(NumericalSemigroup::from_generators(gens));

  std::vector<std::pair<NumericalSemigroup, int>> jobs;
  for (const auto& s : family) {
    if (!spec.alpha_range) {
      jobs.emplace_back(s, 0);
      continue;
    }
    for (int v = spec.alpha_range->first; v <= spec.alpha_range->second; ++v)
      if (!spec.odd_only || v % 2 != 0) jobs.emplace_back(s, v);
  }

  std::vector<std::optional<Row>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& [s, v] = jobs[i];
      results[i] = spec.alpha_range ? idealization_row(s, v) : std::optional<Row>(classification_row(s));
    }
  };
  const int workers = std::max(1, spec.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<Row> rows;
  for (auto& r : results)
    if (r) rows.push_back(std::move(*r));
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.generators, a.v) < std::tie(b.generators, b.v);
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Row& a, const Row& b) { return a.generators == b.generators && a.v == b.v; }),
             rows.end());

  SweepResult out;
  out.rows = static_cast<int>(rows.size());
  if (spec.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(r.json);
    out.text = arr.dump(2) + "\n";
  } else if (spec.format == "csv") {
    out.text = std::string("# z2lab sweep ") + kVersion + (spec.alpha_range ? " idealization" : " classification") + "\n";
    out.text += spec.alpha_range ? "generators,v,ag,gor,cm_type,embdim,regular,oracle_agrees\n"
                                 : "generators,F,type,e1,gor,ag,ng\n";
    for (const auto& r : rows) out.text += r.csv + "\n";
  } else {
    fail(ErrorCode::ParseError, "unknown format '" + spec.format + "'");
  }
  for (const auto& r : rows) out.violations += r.violation ? 1 : 0;
  return out;
}

}  // namespace z2lab
