#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ecoroute::csv {

// Minimal reader for the comma-separated, unquoted, LF-terminated files used
// by the scenario, model-training and report formats.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers; // 1-based source line per row
};

// Reads a file and checks that its header matches `expected_header` exactly.
Table read_file(const std::string &path, std::string_view expected_header);
Table read_stream(std::istream &in, std::string_view expected_header,
                  const std::string &source_name);

std::vector<std::string> split(std::string_view line, char sep = ',');

double parse_double(std::string_view field, const std::string &context);
std::int64_t parse_int(std::string_view field, const std::string &context);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

} // namespace ecoroute::csv
