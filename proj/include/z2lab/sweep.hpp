#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2lab/semigroup.hpp"

namespace z2lab {

inline constexpr const char* kVersion = "0.1.0";

/// Semigroups minimally generated by subsets of {2, ..., gen_bound} with at
/// most max_size elements, deduplicated by gap set and sorted by generators.
std::vector<NumericalSemigroup> enumerate_family(int gen_bound, int max_size);

struct SweepSpec {
  // family: either a bound pair or an explicit list
  std::optional<std::pair<int, int>> bounds;  // (generator bound m, max embdim k)
  std::vector<std::vector<int>> explicit_list;
  // monomial α range; when absent the sweep classifies S only
  std::optional<std::pair<int, int>> alpha_range;
  bool odd_only = false;
  std::string format = "csv";  // csv | json
  int workers = 1;
};

struct SweepResult {
  std::string text;
  int rows = 0;
  int violations = 0;
};

/// Runs the sweep on `spec.workers` threads. Output rows are sorted by
/// (generators, v), so the text does not depend on the worker count.
/// Idealization sweeps emit only admissible v.
SweepResult run_sweep(const SweepSpec& spec);

/// Worker count from Z2LAB_WORKERS if set, else `fallback`.
int workers_from_env(int fallback);

}  // namespace z2lab
