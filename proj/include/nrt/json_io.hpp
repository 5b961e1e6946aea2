#pragma once

#include <json.hpp>

#include "nrt/codes.hpp"
#include "nrt/gf.hpp"
#include "nrt/linalg.hpp"

namespace nrt {

using Json = nlohmann::json;

// {"p": int, "k": int, "modulus": [int,...]} — modulus omitted for k = 1,
// coefficients constant term first.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

// {"field": {...}, "n": int, "m": int, "generators": [[int,...],...]} with
// elements encoded as canonical-order indices, codewords flattened row-major.
Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

// Arrays of arrays of rational strings ("3/2", "-1", ...).
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {"generators": [matrix, matrix, ...]}
std::vector<RatMatrix> group_generators_from_json(const Json& j);

}  // namespace nrt
