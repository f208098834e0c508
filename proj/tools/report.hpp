#pragma once

#include <string>

#include "json.hpp"
#include "toricsym/blowup.hpp"
#include "toricsym/census.hpp"
#include "toricsym/chow.hpp"
#include "toricsym/symmetry.hpp"

namespace toricsym::report {

inline constexpr const char* kSchemaVersion = "1.0.0";

using nlohmann::json;

json fan_to_json(const Fan& fan);
json ledger_to_json(const BlowupSpace& space);
json presentation_to_json(const Fan& fan, const ChowPresentation& p);
json symmetry_to_json(const BlowupSpace& space, const ToricSymmetry& sym, std::size_t index);

/// Everything `analyze` prints for one space.
json analyze_payload(const BlowupSpace& space);
json census_payload(const CensusReport& report);

/// {schema_version, command, payload}. Keys are emitted sorted, so dumps are
/// byte-stable for fixed inputs.
json envelope(const std::string& command, json payload);

std::string dump(const json& j);

}  // namespace toricsym::report
