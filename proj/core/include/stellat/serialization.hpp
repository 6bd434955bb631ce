#pragma once

#include "stellat/func_element.hpp"
#include "stellat/norm.hpp"

#include <nlohmann/json.hpp>

namespace stellat {

using Json = nlohmann::json;

/// Canonical JSON form:
///   {"d": 1,
///    "ap": [{"freq": "p/q" | number | [per-component], "re": .., "im": ..}],
///    "c0": [{"num": [coeff..], "den": [coeff..], "freq": "p/q" | number}]}
/// Exact frequencies serialize as strings of integers and round-trip
/// exactly; irrational-mode frequencies serialize as JSON numbers.
/// Numerator coefficients are numbers when real and {"re","im"} otherwise;
/// denominators are emitted expanded.
Json to_json(const FuncElement& a);
FuncElement func_element_from_json(const Json& j);

Json to_json(const NormEnclosure& e);

} // namespace stellat
