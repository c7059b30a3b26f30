#pragma once

#include <string>

#include <json.hpp>

#include "halfhopf/circle_function.hpp"
#include "halfhopf/energy.hpp"
#include "halfhopf/flows.hpp"
#include "halfhopf/hopf.hpp"
#include "halfhopf/mobius.hpp"
#include "halfhopf/variation.hpp"

namespace halfhopf {

using Json = nlohmann::json;

/// {"bandwidth": N, "dim": k, "real": bool, "coeffs": [[n, [[re, im], ...]], ...]}
/// Every stored mode is listed, n ascending.
Json to_json(const CircleFunction& f);

/// Strict inverse of to_json. Unlisted modes are zero; a real function must
/// be exactly conjugate-symmetric. InputError messages name the offending
/// field, e.g. "coeffs[3][1][0]".
CircleFunction circle_function_from_json(const Json& j);

/// Reads and validates a file; parse errors carry line and column.
CircleFunction read_circle_function(const std::string& path);

Json to_json(const MobiusMap& m);
MobiusMap mobius_from_json(const Json& j);

Json to_json(const HopfReport& r);
Json to_json(const ResidualReport& r);
Json to_json(const NormReport& r);
Json to_json(const FlowTrajectory& t);

/// True if any number in the document is NaN or infinite.
bool contains_non_finite(const Json& j);

}  // namespace halfhopf
