#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cloudbench/bench.hpp"

namespace cloudbench {

inline constexpr std::string_view kReportSchemaVersion = "1";

/// Canonical report JSON: fixed key order, two-space indent, trailing LF.
/// Writing the result of reading canonical JSON reproduces it byte for byte.
std::string report_to_json(const Report& report);
/// Throws SchemaError for malformed JSON, missing or mistyped fields, or an
/// unknown schema_version.
Report report_from_json(std::string_view json);

Report read_report_file(const std::filesystem::path& path);
void write_report_file(const std::filesystem::path& path, const Report& report);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Plot data CSV: header "series,input_size,avg_ms", one line per row,
/// sorted by (series, input_size). Rows without an input size use 0.
/// Throws DomainError when two reports share an environment label.
std::string plot_data_csv(const std::vector<Report>& reports,
                          std::optional<Algorithm> only = std::nullopt);

/// "AES(10 KB)", "RSA(501 B)", "PAILLIER".
std::string row_label(const BenchCase& bench_case);
/// Samples, row averages and per-algorithm averages as a fixed-width table.
std::string render_report_table(const Report& report);

enum class TableFormat { Table, Csv, Json };
TableFormat parse_table_format(std::string_view name);
std::string render_speedup(const SpeedUpTable& table, TableFormat format);

}  // namespace cloudbench
