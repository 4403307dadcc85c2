#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "phaseless/hardness.hpp"
#include "phaseless/solver.hpp"

namespace phaseless::io {

using Json = nlohmann::ordered_json;

/// Accepts a string in rational text form or a JSON integer.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);

/// {"n": <int>, "points": [{"x": "<rat>", "y": "<rat>"}, ...]}
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// Coefficient list, index = power; the zero polynomial prints as ["0"].
/// `min_length` pads with zeros.
Json coeffs_to_json(const UPoly& p, std::size_t min_length = 0);
UPoly coeffs_from_json(const Json& j);

/// {"solutions": [{"coeffs": [...]}, ...], "count": <int>}
Json solutions_to_json(const SolutionSet& set);
SolutionSet solutions_from_json(const Json& j);

Json reduction_to_json(const ReductionInstance& inst);
ReductionInstance reduction_from_json(const Json& j);

/// Comma-separated rationals, e.g. "1,-2,3/4".
std::vector<Rat> parse_rat_list(std::string_view text);
/// Comma-separated signs: "+", "-", "1", "-1", "+1".
std::vector<int> parse_sign_list(std::string_view text);

/// Parses JSON text; malformed input throws Error(ParseError).
Json parse_json(const std::string& text);

}  // namespace phaseless::io
