#pragma once

#include <string>
#include <string_view>

#include "pixshuffle/analysis.hpp"

namespace pixshuffle {

enum class ReportFormat {
  structured,  ///< JSON with the field names listed in the README
  csv,         ///< "index,R,G,B" rows of the plain image's RGB series
  text,        ///< human-readable summary
};

/// Accepts "structured", "json", "csv" or "text"; throws InvalidArgument otherwise.
ReportFormat parse_report_format(std::string_view text);

std::string export_report(const AnalysisReport& report, ReportFormat format);

/// Inverse of export_report(..., ReportFormat::structured).
/// Throws FormatError(malformed_report) naming the first bad field.
AnalysisReport parse_structured_report(std::string_view json);

}  // namespace pixshuffle
