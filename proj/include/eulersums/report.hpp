#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "eulersums/verify.hpp"

namespace eulersums {

enum class OutputFormat { table, json, csv };

std::string to_string(OutputFormat format);
/// Throws Error for anything but table/json/csv.
OutputFormat parse_output_format(std::string_view text);

inline constexpr std::array<std::string_view, 8> kReportFields{
    "id", "lhs_value", "rhs_value", "residual", "tolerance", "verdict", "digits", "K"};

/// The report as decimal strings in kReportFields order. Values are printed with `digits`
/// significant digits, the residual with 6; missing values are empty.
std::array<std::string, 8> report_fields(const VerificationReport& report);

/// JSON array of objects keyed by kReportFields, every value a string.
std::string emit_json(const std::vector<VerificationReport>& reports);
/// Header row plus one row per report.
std::string emit_csv(const std::vector<VerificationReport>& reports);
/// Aligned columns and a summary line.
std::string emit_table(const std::vector<VerificationReport>& reports);

std::string emit_report(const std::vector<VerificationReport>& reports, OutputFormat format);

} // namespace eulersums
