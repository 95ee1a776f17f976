#pragma once

// JSON encodings:
//   algebra  {"factors":[{"label":"a","chain":"L3"}, ...]}
//   element  {"coords":{"a":"1/2", ...}}
//   ideal    {"free":["a", ...]}
//   multiset {"points":[{"label":"a","mult":"1"}, ...]}
//   profile  {"entries":[{"mult":"2","card":"omega"}, ...]}
//   hom      {"source":<algebra>,"target":<algebra>,"index_map":{"y1":"x2", ...}}
//   morphism {"source":<multiset>,"target":<multiset>,"map":{"a":"b", ...}}
// Decoders validate through the same factories as the rest of the library and
// throw invalid_json for structurally malformed input.

#include "json.hpp"

#include "mvdual/algebra.hpp"
#include "mvdual/duality.hpp"
#include "mvdual/multiset.hpp"

namespace mvdual {

using Json = nlohmann::json;

Json to_json(const ProductAlgebra& algebra);
Json to_json(const Element& element);
Json to_json(const SupportIdeal& ideal);
Json to_json(const EMultiset& multiset);
Json to_json(const Profile& profile);
Json to_json(const ContinuousHom& hom);
Json to_json(const EMMorphism& morphism);

ProductAlgebra algebra_from_json(const Json& j);
Element element_from_json(const Json& j, const ProductAlgebra& algebra);
SupportIdeal ideal_from_json(const Json& j, const ProductAlgebra& algebra);
EMultiset multiset_from_json(const Json& j);
Profile profile_from_json(const Json& j);
ContinuousHom hom_from_json(const Json& j);
EMMorphism morphism_from_json(const Json& j);

}  // namespace mvdual
