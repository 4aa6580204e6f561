#pragma once

#include <string>

#include "zagreb/verify.hpp"

namespace zagreb {

inline constexpr const char* kReportVersion = "1";

/// JSON report: {version, params, claims[], extremal[]}. Exact values are
/// decimal strings and canonical codes hex strings. The output depends only
/// on the report contents, never on worker counts or timing.
std::string render_json(const VerificationReport& report);

/// One row per claim and one per extremal cell.
std::string render_csv(const VerificationReport& report);

/// Human-readable summary, one line per claim.
std::string render_text(const VerificationReport& report);

}  // namespace zagreb
