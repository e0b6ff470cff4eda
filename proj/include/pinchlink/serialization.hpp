#pragma once

#include "pinchlink/abelian_group.hpp"
#include "pinchlink/integer.hpp"
#include "pinchlink/normalization.hpp"
#include "pinchlink/pinched_model.hpp"
#include "pinchlink/plumbing.hpp"

#include <json.hpp>

#include <string>

namespace pinchlink::io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json to_json(const PlumbingGraph& g);
PlumbingGraph graph_from_json(const Json& j);

Json to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);

/// Row-major nested arrays.
Json to_json(const IntMatrix& m);

/// Top-level singular link document. Unknown keys (such as "_expected")
/// are ignored on input.
Json to_json(const SingularLinkDescription& s);
SingularLinkDescription document_from_json(const Json& j);

}  // namespace pinchlink::io
