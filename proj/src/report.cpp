#include "eulersums/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "eulersums/error.hpp"

namespace eulersums {

namespace {

constexpr int kResidualDigits = 6;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_string(OutputFormat format) {
    switch (format) {
    case OutputFormat::table:
        return "table";
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    }
    return "table";
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "table") {
        return OutputFormat::table;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    if (text == "csv") {
        return OutputFormat::csv;
    }
    throw Error("unknown output format '" + std::string(text) + "' (expected table, json or csv)");
}

std::array<std::string, 8> report_fields(const VerificationReport& r) {
    auto value = [&](const std::optional<HighFloat>& v, int sig) { return v ? v->to_string(sig) : std::string(); };
    return {r.id,
            value(r.lhs_value, r.digits),
            value(r.rhs_value, r.digits),
            value(r.residual, kResidualDigits),
            format_tolerance(r.tolerance),
            to_string(r.verdict),
            std::to_string(r.digits),
            std::to_string(r.K)};
}

std::string emit_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        const auto fields = report_fields(r);
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            row[std::string(kReportFields[i])] = fields[i];
        }
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

std::string emit_csv(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (std::size_t i = 0; i < kReportFields.size(); ++i) {
        out += (i ? "," : "") + std::string(kReportFields[i]);
    }
    out += "\n";
    for (const auto& r : reports) {
        const auto fields = report_fields(r);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out += (i ? "," : "") + csv_escape(fields[i]);
        }
        out += "\n";
    }
    return out;
}

std::string emit_table(const std::vector<VerificationReport>& reports) {
    const std::vector<std::string> header{"id", "expected", "verdict", "residual", "lhs_value"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
        const auto fields = report_fields(r);
        std::string verdict = fields[5];
        if (r.must_pass_failure()) {
            verdict += " !";
        }
        rows.push_back({fields[0], to_string(r.expected), verdict, fields[3], fields[1]});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(width[c] - row[c].size() + 2, ' ');
            }
        }
        out << "\n";
    };
    line(header);
    for (const auto& row : rows) {
        line(row);
    }
    for (const auto& r : reports) {
        if (r.verdict == Verdict::error) {
            out << "error: " << r.message << "\n";
        }
    }
    out << summarize(reports).to_string() << "\n";
    return out.str();
}

std::string emit_report(const std::vector<VerificationReport>& reports, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return emit_json(reports);
    case OutputFormat::csv:
        return emit_csv(reports);
    case OutputFormat::table:
        return emit_table(reports);
    }
    return emit_table(reports);
}

} // namespace eulersums
