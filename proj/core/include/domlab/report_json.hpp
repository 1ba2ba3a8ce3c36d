#pragma once

#include <string>
#include <string_view>

#include "domlab/verify.hpp"

namespace domlab {

/// Version tag written into every report document.
inline constexpr std::string_view kReportSchema = "domlab.verification-report.v1";

/// Serializes a report with a fixed key order. With include_elapsed = false the
/// elapsed_ms key is omitted so identical sweeps give identical bytes.
std::string report_to_json(const VerificationReport& report, int indent = 2, bool include_elapsed = true);

/// Parses a document written by report_to_json. Throws std::invalid_argument
/// when required keys are missing or have the wrong type.
VerificationReport report_from_json(std::string_view text);

}  // namespace domlab
