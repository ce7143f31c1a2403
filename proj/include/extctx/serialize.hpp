#pragma once

#include <json.hpp>

#include "extctx/morphism.hpp"

namespace extctx {

// Witness serialization: objects as {id, carrier, order}, morphisms as label
// tables, subsets as label lists.

nlohmann::json to_json(const FiniteObject& x);
nlohmann::json to_json(const Morphism& f);
nlohmann::json subset_json(const FiniteObject& x, Mask m);

/// Inverse of to_json(FiniteObject); `ordered` decides the flavour when the
/// document has no "order" key. Throws CategoryError on malformed input.
ObjectRef object_from_json(const nlohmann::json& j, bool ordered);
Morphism morphism_from_json(const nlohmann::json& j);
Mask subset_from_json(const FiniteObject& x, const nlohmann::json& j);

}  // namespace extctx
