#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kmlab/bench.hpp"
#include "kmlab/clustering.hpp"

namespace kmlab {

enum class ReportFormat { csv, json, plotdata };

ReportFormat format_from_string(std::string_view s);
std::string_view to_string(ReportFormat f);

/// Record rows, a blank line, then the aggregate block. When the report is
/// partial a leading comment carries the failure.
void write_csv(const BenchReport& report, std::ostream& out);

nlohmann::json to_json(const BenchReport& report);

/// Parses a schema-1 report and re-derives every aggregate from the record
/// rows, rejecting the file if they disagree. Throws IoError on any schema
/// violation.
BenchReport report_from_json(const nlohmann::json& j);
BenchReport load_report(const std::filesystem::path& path);

/// One x/y series per chart line. Distance sweeps produce a series per
/// metric (x = k); algorithm sweeps one per algorithm over datasets; time
/// and iteration sweeps one per algorithm (x = k).
struct PlotSeries {
    std::string name;
    std::vector<std::pair<std::string, double>> points;  // x label, y value
};
std::vector<PlotSeries> plot_series(const BenchReport& report);

/// Writes the report. csv/json produce exactly `path`; plotdata produces
/// one "<path>.<series>.dat" file per series and returns their paths.
std::vector<std::filesystem::path> emit(const BenchReport& report, ReportFormat format,
                                        const std::filesystem::path& path);

/// Serialization of one clustering execution, as printed by the CLI.
/// Deterministic apart from the elapsed_ms field.
nlohmann::json cluster_result_json(const Dataset& d, const ClusteringResult& result,
                                   Algorithm algo, Metric metric, std::size_t k,
                                   std::uint64_t seed, DbVariant variant,
                                   Normalize normalize_mode);

}  // namespace kmlab
