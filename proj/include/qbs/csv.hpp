#pragma once

#include <string>
#include <vector>

namespace qbs {

/// Numeric table destined for CSV: comma separators, header row, LF line
/// endings, '.' decimal point, 12 significant digits, no locale dependence.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// 12 significant digits, locale-free (%.12g against the C locale).
std::string format_number(double v);

std::string to_csv(const CsvTable& table);

/// Inverse of to_csv for round-trip checks; throws on malformed input.
CsvTable parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace qbs
