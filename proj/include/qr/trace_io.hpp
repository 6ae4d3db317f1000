#pragma once

#include <string>

#include <json.hpp>

#include "qr/lemmas.hpp"

namespace qr {

// Fixed trace schema, for machine-diffable regression tests:
// {"p":int,"q":int,"rows":[{"a":..,"r":..,"eps":..,"a_prime":..,
//  "floor_2qa":..,"floor_qa":..}],"M":int,"mu":int,"symbol":int}
nlohmann::ordered_json trace_to_json(const GaussTrace& trace);

// Header line, one tab-separated row per a, then M / mu / symbol rows.
std::string trace_to_tsv(const GaussTrace& trace);

// Inverse of trace_to_json. Parses structure only; run validate_trace on
// the result to check the mathematical invariants.
GaussTrace trace_from_json(const nlohmann::ordered_json& j);

}  // namespace qr
