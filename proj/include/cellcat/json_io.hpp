#pragma once

#include "cellcat/delta_poly.hpp"
#include "cellcat/laurent_poly.hpp"
#include "cellcat/tl_diagram.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cellcat::io {

using json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"-1": 1, "1": 1}, keys in ascending numeric order. Coefficients outside the
/// 64-bit range are written as decimal strings.
json to_json(const LaurentPoly& p);
/// [c0, c1, ...] indexed by degree; [] for zero.
json to_json(const DeltaPoly& p);
/// {"n": 2, "m": 2, "pairs": [[1, 2], [3, 4]]}
json to_json(const tl::Diagram& d);
/// {"n": .., "m": .., "terms": [{"diagram": .., "coeff": [..]}]}, terms sorted by
/// the serialized diagram text.
json to_json(const tl::Morphism& f);

LaurentPoly laurent_from_json(const json& j);
DeltaPoly delta_from_json(const json& j);
tl::Diagram diagram_from_json(const json& j);
/// Accepts a morphism object or a bare diagram object (coefficient 1).
tl::Morphism morphism_from_json(const json& j);

}  // namespace cellcat::io
