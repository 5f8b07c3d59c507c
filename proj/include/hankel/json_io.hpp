#pragma once

#include <json.hpp>

#include "hankel/rank_relations.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

using Json = nlohmann::ordered_json;

// Scalars: exact as strings "p/q" / "p/q+r/s i", float as [re, im].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Mode mode);

// {"n":…, "m":…, "mode":"exact"|"float", "h":[…]}
Json tensor_to_json(const HankelTensor& H);
HankelTensor tensor_from_json(const Json& j);

// {"n":…, "m":…, "unique":…, "terms":[{"lambda":…, "a":…, "b":…}…]}
Json decomposition_to_json(const VandermondeDecomposition& dec);
VandermondeDecomposition decomposition_from_json(const Json& j);

Json report_to_json(const RankReport& rep);

Json parse_json_file(const std::string& path);
// Atomic write: temp file in the same directory, then rename.
void write_json_file(const std::string& path, const Json& j);

}  // namespace hankel
