#include "cloudbench/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cloudbench/error.hpp"

namespace cloudbench {

namespace {

using Json = nlohmann::ordered_json;

Json row_to_json(const BenchRow& row) {
  const BenchCase& c = row.bench_case;
  Json j;
  j["algorithm"] = algorithm_name(c.algorithm);
  j["input_size_bytes"] = c.input_size ? Json(*c.input_size) : Json(nullptr);
  j["key_size_bits"] = c.key_size ? Json(*c.key_size) : Json(nullptr);
  j["include_keygen"] = c.include_keygen;
  j["seed"] = c.seed;
  j["samples_ms"] = row.samples_ms;
  j["average_ms"] = row.average_ms;
  return j;
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object()) throw SchemaError("expected a JSON object");
  const auto it = object.find(key);
  if (it == object.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t nonnegative_int(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw SchemaError(std::string(what) + " must be a nonnegative integer");
  }
  return value.get<std::int64_t>();
}

template <typename T>
std::optional<T> optional_unsigned(const Json& value, const char* what) {
  if (value.is_null()) return std::nullopt;
  return static_cast<T>(nonnegative_int(value, what));
}

BenchRow row_from_json(const Json& j) {
  BenchRow row;
  BenchCase& c = row.bench_case;
  const Json& algorithm = field(j, "algorithm");
  if (!algorithm.is_string()) throw SchemaError("algorithm must be a string");
  try {
    c.algorithm = parse_algorithm(algorithm.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
  c.input_size = optional_unsigned<std::size_t>(field(j, "input_size_bytes"), "input_size_bytes");
  c.key_size = optional_unsigned<unsigned>(field(j, "key_size_bits"), "key_size_bits");
  const Json& keygen = field(j, "include_keygen");
  if (!keygen.is_boolean()) throw SchemaError("include_keygen must be a boolean");
  c.include_keygen = keygen.get<bool>();
  const Json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    throw SchemaError("seed must be an unsigned integer");
  }
  c.seed = seed.get<std::uint64_t>();
  const Json& samples = field(j, "samples_ms");
  if (!samples.is_array() || samples.size() != kSamplesPerRow) {
    throw SchemaError("samples_ms must hold exactly " + std::to_string(kSamplesPerRow) + " integers");
  }
  for (std::size_t i = 0; i < kSamplesPerRow; ++i) row.samples_ms[i] = nonnegative_int(samples[i], "samples_ms entry");
  row.average_ms = nonnegative_int(field(j, "average_ms"), "average_ms");
  return row;
}

std::string size_label(std::size_t bytes) {
  if (bytes >= 1024 && bytes % 1024 == 0) return std::to_string(bytes / 1024) + " KB";
  return std::to_string(bytes) + " B";
}

void check_csv_field(const std::string& label) {
  if (label.find_first_of(",\"\r\n") != std::string::npos) {
    throw DomainError("environment label '" + label + "' cannot be written to CSV");
  }
}

}  // namespace

std::string report_to_json(const Report& report) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["environment_label"] = report.environment_label;
  j["host_metadata"] = Json::object();
  for (const auto& [k, v] : report.host_metadata) j["host_metadata"][k] = v;
  j["created_at"] = report.created_at;
  j["rows"] = Json::array();
  for (const auto& row : report.rows) j["rows"].push_back(row_to_json(row));
  j["per_algorithm_average_ms"] = Json::object();
  for (const auto& [a, avg] : report.per_algorithm_average_ms) j["per_algorithm_average_ms"][std::string(algorithm_name(a))] = avg;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("report is not valid JSON: ") + e.what());
  }
  const Json& version = field(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kReportSchemaVersion) {
    throw SchemaError("unsupported report schema_version " + version.dump());
  }

  Report report;
  const Json& label = field(j, "environment_label");
  if (!label.is_string()) throw SchemaError("environment_label must be a string");
  report.environment_label = label.get<std::string>();

  const Json& meta = field(j, "host_metadata");
  if (!meta.is_object()) throw SchemaError("host_metadata must be an object");
  for (const auto& [k, v] : meta.items()) {
    if (!v.is_string()) throw SchemaError("host_metadata values must be strings");
    report.host_metadata[k] = v.get<std::string>();
  }

  const Json& created = field(j, "created_at");
  if (!created.is_string()) throw SchemaError("created_at must be a string");
  report.created_at = created.get<std::string>();

  const Json& rows = field(j, "rows");
  if (!rows.is_array()) throw SchemaError("rows must be an array");
  for (const auto& row : rows) report.rows.push_back(row_from_json(row));

  const Json& averages = field(j, "per_algorithm_average_ms");
  if (!averages.is_object()) throw SchemaError("per_algorithm_average_ms must be an object");
  for (const auto& [k, v] : averages.items()) {
    try {
      report.per_algorithm_average_ms[parse_algorithm(k)] = nonnegative_int(v, "per-algorithm average");
    } catch (const DomainError& e) {
      throw SchemaError(e.what());
    }
  }
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DomainError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DomainError("cannot replace '" + path.string() + "'");
  }
}

Report read_report_file(const std::filesystem::path& path) { return report_from_json(read_file(path)); }

void write_report_file(const std::filesystem::path& path, const Report& report) {
  write_file_atomic(path, report_to_json(report));
}

std::string plot_data_csv(const std::vector<Report>& reports, std::optional<Algorithm> only) {
  struct Line {
    std::string series;
    std::size_t input_size;
    Algorithm algorithm;
    std::int64_t avg;
  };
  std::vector<Line> lines;
  std::vector<std::string> seen;
  for (const auto& report : reports) {
    if (std::find(seen.begin(), seen.end(), report.environment_label) != seen.end()) {
      throw DomainError("duplicate environment label '" + report.environment_label + "'");
    }
    check_csv_field(report.environment_label);
    seen.push_back(report.environment_label);
    for (const auto& row : report.rows) {
      if (only && row.bench_case.algorithm != *only) continue;
      lines.push_back({report.environment_label, row.bench_case.input_size.value_or(0), row.bench_case.algorithm,
                       row.average_ms});
    }
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::tie(a.series, a.input_size, a.algorithm) < std::tie(b.series, b.input_size, b.algorithm);
  });
  std::string out = "series,input_size,avg_ms\n";
  for (const auto& l : lines) {
    out += l.series + "," + std::to_string(l.input_size) + "," + std::to_string(l.avg) + "\n";
  }
  return out;
}

std::string row_label(const BenchCase& c) {
  std::string label(algorithm_name(c.algorithm));
  if (c.input_size) label += "(" + size_label(*c.input_size) + ")";
  return label;
}

std::string render_report_table(const Report& report) {
  constexpr int kLabel = 40;
  constexpr int kCol = 10;
  std::ostringstream out;
  out << "Total Execution Time (" << report.environment_label << ")\n";
  out << std::left << std::setw(kLabel) << "ALGO / INPUT SIZE" << std::right;
  for (std::size_t i = 1; i <= kSamplesPerRow; ++i) out << std::setw(kCol) << ("SAMPLE-" + std::to_string(i));
  out << std::setw(kCol) << "AVERAGE" << "\n";

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const BenchRow& row = report.rows[i];
    out << std::left << std::setw(kLabel) << row_label(row.bench_case) << std::right;
    for (auto s : row.samples_ms) out << std::setw(kCol) << s;
    out << std::setw(kCol) << row.average_ms << "\n";

    const Algorithm a = row.bench_case.algorithm;
    const bool group_ends = i + 1 == report.rows.size() || report.rows[i + 1].bench_case.algorithm != a;
    if (group_ends) {
      const auto avg = report.per_algorithm_average_ms.find(a);
      if (avg != report.per_algorithm_average_ms.end()) {
        out << std::left << std::setw(kLabel + kCol * static_cast<int>(kSamplesPerRow))
            << (std::string(algorithm_name(a)) + " Average Total Execution Time(ms)") << std::right
            << std::setw(kCol) << avg->second << "\n";
      }
    }
  }
  return out.str();
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "table") return TableFormat::Table;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw DomainError("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string render_speedup(const SpeedUpTable& table, TableFormat format) {
  auto join = [](const std::vector<Algorithm>& algorithms) {
    std::string out;
    for (Algorithm a : algorithms) {
      if (!out.empty()) out += ", ";
      out += algorithm_name(a);
    }
    return out;
  };

  std::ostringstream out;
  switch (format) {
    case TableFormat::Table: {
      out << "Speed-Up Ratio (local: " << table.local_label << ", cloud: " << table.cloud_label << ")\n";
      out << std::left << std::setw(12) << "ALGORITHM" << std::right << std::setw(14) << "LOCAL_AVG_MS"
          << std::setw(14) << "CLOUD_AVG_MS" << std::setw(10) << "SPEEDUP" << "\n";
      for (const auto& e : table.entries) {
        out << std::left << std::setw(12) << algorithm_name(e.algorithm) << std::right << std::setw(14)
            << e.local_avg_ms << std::setw(14) << e.cloud_avg_ms << std::setw(10) << (e.ratio ? e.ratio->str() : "n/a") << "\n";
      }
      if (!table.only_local.empty()) out << "skipped (only in local): " << join(table.only_local) << "\n";
      if (!table.only_cloud.empty()) out << "skipped (only in cloud): " << join(table.only_cloud) << "\n";
      break;
    }
    case TableFormat::Csv: {
      out << "algorithm,local_avg_ms,cloud_avg_ms,speedup_ratio,status\n";
      for (const auto& e : table.entries) {
        out << algorithm_name(e.algorithm) << "," << e.local_avg_ms << "," << e.cloud_avg_ms << ","
            << (e.ratio ? e.ratio->str() + ",ok" : ",undefined") << "\n";
      }
      for (Algorithm a : table.only_local) out << algorithm_name(a) << ",,,,only_local\n";
      for (Algorithm a : table.only_cloud) out << algorithm_name(a) << ",,,,only_cloud\n";
      break;
    }
    case TableFormat::Json: {
      Json j;
      j["local_label"] = table.local_label;
      j["cloud_label"] = table.cloud_label;
      j["entries"] = Json::array();
      for (const auto& e : table.entries) {
        Json entry;
        entry["algorithm"] = algorithm_name(e.algorithm);
        entry["local_avg_ms"] = e.local_avg_ms;
        entry["cloud_avg_ms"] = e.cloud_avg_ms;
        entry["speedup_ratio"] = e.ratio ? Json(e.ratio->str()) : Json(nullptr);
        j["entries"].push_back(entry);
      }
      Json skipped;
      skipped["only_local"] = Json::array();
      skipped["only_cloud"] = Json::array();
      for (Algorithm a : table.only_local) skipped["only_local"].push_back(algorithm_name(a));
      for (Algorithm a : table.only_cloud) skipped["only_cloud"].push_back(algorithm_name(a));
      j["skipped"] = skipped;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace cloudbench
