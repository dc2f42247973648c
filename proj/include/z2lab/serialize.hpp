#pragma once

#include <json.hpp>

#include "z2lab/artinian.hpp"
#include "z2lab/classify.hpp"
#include "z2lab/graded.hpp"
#include "z2lab/ideal.hpp"
#include "z2lab/semigroup.hpp"
#include "z2lab/series.hpp"

namespace z2lab {

using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const RelativeIdeal& e);
Json to_json(const Classification& c);
Json to_json(const LaurentSeries& a);
LaurentSeries series_from_json(const Json& j);
Json to_json(const Alpha& a);
Json to_json(const IdealizationReport& r);
Json to_json(const DichotomyReport& r);

/// An algebra, module and form read from
/// {basis, structure_constants: [[i,j,k,"q"],...], module_dim,
///  module_actions: [[i,row,col,"q"],...], phi_values: [[i,j,k,"q"],...]}.
/// Products with the unit and the unit action are implied; entries given
/// for (i,j) only are mirrored to (j,i). Throws ParseError on malformed input.
struct ArtinianInput {
  FiniteAlgebra algebra;
  FiniteModule module;
  BilinearForm phi;
};
ArtinianInput artinian_from_json(const Json& j);

}  // namespace z2lab
