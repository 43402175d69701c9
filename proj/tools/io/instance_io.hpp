#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fae/convex_body.hpp"
#include "fae/frobenius.hpp"
#include "fae/statement.hpp"

namespace fae::io {

using nlohmann::json;

/// Numbers or decimal strings.
Int int_from_json(const json& j);
/// Integers, "p/q" strings or "p" strings.
Rat rat_from_json(const json& j);
IntVector int_vector_from_json(const json& j);
RatVector rat_vector_from_json(const json& j);
IntMatrix int_matrix_from_json(const json& j);
std::vector<IntVector> int_vectors_from_json(const json& j);

/// A JSON number when the value fits in 64 bits, otherwise a string.
json to_json(const Int& v);
/// "p/q" string; integral values as integers.
json to_json(const Rat& v);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntMatrix& a);

/// {"type":"box","lo":[..],"hi":[..]} | {"type":"polytope","A":[[..]],"d":[..]}
/// | {"type":"ball","center":[..],"radius":"p/q"}
BodyPtr body_from_json(const json& j);
/// Inverse of body_from_json for box, polytope and ball bodies.
json body_to_json(const ConvexBody& q);

/// {"W": [[..]], "Q": {..}}
InputStatement statement_from_json(const json& j);
json statement_to_json(const InputStatement& s);

json verdict_to_json(const Verdict& v);
json trace_to_json(const ReductionTrace& t);
json frobenius_to_json(const DiagonalFrobeniusReport& r);

/// Parses a file; errors become ParseError.
json read_json_file(const std::string& path);

}  // namespace fae::io
