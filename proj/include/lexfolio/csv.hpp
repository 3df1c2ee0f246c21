#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lexfolio {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style reader: quoted fields, embedded commas/quotes, CRLF line
// endings. The first record is returned as the header. Throws ParseError.
CsvTable read_csv(const std::filesystem::path& path);

// Splits one CSV record (no trailing newline handling).
std::vector<std::string> split_csv_line(std::string_view line);

// Quotes a field when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

std::string join_csv_row(const std::vector<std::string>& fields);

} // namespace lexfolio
