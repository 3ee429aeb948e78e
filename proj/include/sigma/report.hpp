#pragma once

#include <string>

#include "json.hpp"
#include "sigma/harness.hpp"

namespace sigma {

inline constexpr const char* kToolName = "sigma-groups";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1.0";

/// Structured form, matching schema/report.schema.json.
nlohmann::json report_to_json(const VerificationReport& rep);

/// Human-readable table.
std::string report_to_text(const VerificationReport& rep);

/// Zeroes every elapsed_ms field, for byte-level comparisons of reports
/// that differ only in timing.
void strip_timings(nlohmann::json& doc);

/// Minimal JSON-schema check (type / required / properties / items / enum),
/// enough to validate reports against the shipped schema.
bool validate_json(const nlohmann::json& doc, const nlohmann::json& schema, std::string* error);

}  // namespace sigma
