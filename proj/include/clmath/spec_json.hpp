#pragma once

#include <json.hpp>

#include "clmath/params.hpp"
#include "clmath/rosetta.hpp"
#include "clmath/types.hpp"

namespace clmath {

using Json = nlohmann::ordered_json;

// {"form": "bancor_v2", "x0": .., "y0": .., "A": ..} and so on; natural specs
// carry "anchor", the anchor's two coordinates and "c".
Json spec_to_json(const CurveSpec& spec);

// Throws DomainError for an unknown form or a missing/non-numeric field.
CurveSpec spec_from_json(const Json& j);

// Non-finite values (reference-curve intercepts, c, phi) are written as null.
Json geometry_to_json(const CurveGeometry& g);

Json form_tag_to_json(const FormTag& tag);
Json report_to_json(const TranslationReport& report);

// Finite doubles as numbers, everything else as null.
Json number_or_null(double v);

}  // namespace clmath
