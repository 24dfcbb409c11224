#include "kmlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "kmlab/error.hpp"
#include "kmlab/validity.hpp"

namespace kmlab {

namespace {

constexpr const char* kRecordHeader =
    "dataset,algorithm,metric,k,seed,db_index,db_variant,iterations,elapsed_ms,converged,"
    "normalize";
constexpr const char* kAggregateHeader =
    "dataset,algorithm,metric,k,value,count,mean,min,max,median,vs_kmeans";

std::string number(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

nlohmann::json record_to_json(const BenchRecord& r) {
    return {{"dataset", r.dataset},
            {"algorithm", to_string(r.algorithm)},
            {"metric", to_string(r.metric)},
            {"k", r.k},
            {"seed", r.seed},
            {"db_index", r.db_index},
            {"db_variant", to_string(r.db_variant)},
            {"iterations", r.iterations},
            {"elapsed_ms", r.elapsed_ms},
            {"converged", r.converged},
            {"normalize", to_string(r.normalize)}};
}

BenchRecord record_from_json(const nlohmann::json& j) {
    BenchRecord r;
    r.dataset = j.at("dataset").get<std::string>();
    r.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
    r.metric = metric_from_string(j.at("metric").get<std::string>());
    r.k = j.at("k").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.db_index = j.at("db_index").get<double>();
    r.db_variant = db_variant_from_string(j.at("db_variant").get<std::string>());
    r.iterations = j.at("iterations").get<std::size_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.converged = j.at("converged").get<bool>();
    r.normalize = normalize_from_string(j.at("normalize").get<std::string>());
    return r;
}

nlohmann::json aggregate_to_json(const BenchAggregate& a) {
    nlohmann::json j{{"dataset", a.dataset}, {"algorithm", a.algorithm},
                     {"metric", a.metric},   {"k", a.k},
                     {"value", a.value_field}, {"count", a.count},
                     {"mean", a.mean},       {"min", a.min},
                     {"max", a.max},         {"median", a.median}};
    if (a.vs_kmeans) j["vs_kmeans"] = *a.vs_kmeans;
    return j;
}

BenchAggregate aggregate_from_json(const nlohmann::json& j) {
    BenchAggregate a;
    a.dataset = j.at("dataset").get<std::string>();
    a.algorithm = j.at("algorithm").get<std::string>();
    a.metric = j.at("metric").get<std::string>();
    a.k = j.at("k").get<std::size_t>();
    a.value_field = j.at("value").get<std::string>();
    a.count = j.at("count").get<std::size_t>();
    a.mean = j.at("mean").get<double>();
    a.min = j.at("min").get<double>();
    a.max = j.at("max").get<double>();
    a.median = j.at("median").get<double>();
    if (j.contains("vs_kmeans")) a.vs_kmeans = j.at("vs_kmeans").get<double>();
    return a;
}

double record_value(const BenchRecord& r, const std::string& field) {
    if (field == "db_index") return r.db_index;
    if (field == "elapsed_ms") return r.elapsed_ms;
    return static_cast<double>(r.iterations);
}

bool matches_group(const BenchRecord& r, const BenchAggregate& a) {
    if (!a.dataset.empty() && r.dataset != a.dataset) return false;
    if (!a.algorithm.empty() && to_string(r.algorithm) != a.algorithm) return false;
    if (!a.metric.empty() && to_string(r.metric) != a.metric) return false;
    if (a.k != 0 && r.k != a.k) return false;
    return true;
}

void verify_aggregates(const BenchReport& report) {
    constexpr double kTol = 1e-9;
    for (const auto& agg : report.aggregates) {
        std::vector<double> values;
        for (const auto& r : report.records)
            if (matches_group(r, agg)) values.push_back(record_value(r, agg.value_field));
        if (values.size() != agg.count)
            throw IoError("report: aggregate count mismatch for group '" + agg.dataset + "/" +
                          agg.algorithm + "/" + agg.metric + "/k=" + std::to_string(agg.k) +
                          "'");
        std::sort(values.begin(), values.end());
        double total = 0.0;
        for (double v : values) total += v;
        const double mean = total / static_cast<double>(values.size());
        const double median = values.size() % 2 == 1
                                  ? values[values.size() / 2]
                                  : 0.5 * (values[values.size() / 2 - 1] +
                                           values[values.size() / 2]);
        const bool ok = std::abs(mean - agg.mean) <= kTol * std::max(1.0, std::abs(mean)) &&
                        values.front() == agg.min && values.back() == agg.max &&
                        std::abs(median - agg.median) <= kTol * std::max(1.0, std::abs(median));
        if (!ok)
            throw IoError("report: aggregate statistics do not match records for group '" +
                          agg.dataset + "/" + agg.algorithm + "/" + agg.metric +
                          "/k=" + std::to_string(agg.k) + "'");
    }
}

}  // namespace

ReportFormat format_from_string(std::string_view s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    if (s == "plotdata") return ReportFormat::plotdata;
    throw InvalidArgument("unknown report format: " + std::string(s));
}

std::string_view to_string(ReportFormat f) {
    switch (f) {
        case ReportFormat::csv: return "csv";
        case ReportFormat::json: return "json";
        case ReportFormat::plotdata: return "plotdata";
    }
    return "json";
}

void write_csv(const BenchReport& report, std::ostream& out) {
    if (report.partial) out << "# partial report: " << report.error << "\n";
    out << kRecordHeader << "\n";
    for (const auto& r : report.records) {
        out << r.dataset << ',' << to_string(r.algorithm) << ',' << to_string(r.metric) << ','
            << r.k << ',' << r.seed << ',' << number(r.db_index) << ','
            << to_string(r.db_variant) << ',' << r.iterations << ',' << number(r.elapsed_ms)
            << ',' << (r.converged ? "true" : "false") << ',' << to_string(r.normalize)
            << "\n";
    }
    out << "\n" << kAggregateHeader << "\n";
    for (const auto& a : report.aggregates) {
        out << a.dataset << ',' << a.algorithm << ',' << a.metric << ',' << a.k << ','
            << a.value_field << ',' << a.count << ',' << number(a.mean) << ','
            << number(a.min) << ',' << number(a.max) << ',' << number(a.median) << ','
            << (a.vs_kmeans ? number(*a.vs_kmeans) : "") << "\n";
    }
}

nlohmann::json to_json(const BenchReport& report) {
    nlohmann::json j;
    j["schema"] = report.schema;
    j["kind"] = report.kind;
    j["environment"] = report.environment;
    j["timestamp"] = report.timestamp;
    j["partial"] = report.partial;
    if (report.partial) j["error"] = report.error;
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records) j["records"].push_back(record_to_json(r));
    j["aggregates"] = nlohmann::json::array();
    for (const auto& a : report.aggregates) j["aggregates"].push_back(aggregate_to_json(a));
    return j;
}

BenchReport report_from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || !j.at("schema").is_number_integer())
        throw IoError("report: missing schema field");
    if (j.at("schema").get<int>() != 1)
        throw IoError("report: unsupported schema " + j.at("schema").dump());
    BenchReport report;
    try {
        report.kind = j.at("kind").get<std::string>();
        report.environment = j.at("environment").get<std::string>();
        report.timestamp = j.at("timestamp").get<std::string>();
        report.partial = j.at("partial").get<bool>();
        if (j.contains("error")) report.error = j.at("error").get<std::string>();
        for (const auto& rj : j.at("records")) report.records.push_back(record_from_json(rj));
        for (const auto& aj : j.at("aggregates"))
            report.aggregates.push_back(aggregate_from_json(aj));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("report: malformed json: ") + e.what());
    }
    verify_aggregates(report);
    return report;
}

BenchReport load_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": invalid json: " + e.what());
    }
    return report_from_json(j);
}

std::vector<PlotSeries> plot_series(const BenchReport& report) {
    // Chart lines follow the sweep kind: the grouping field that is not on
    // the x axis names the series.
    std::map<std::string, PlotSeries> by_name;
    for (const auto& a : report.aggregates) {
        std::string series_name;
        std::string x;
        double y = 0.0;
        if (report.kind == "distance-sweep") {
            series_name = a.metric;
            x = std::to_string(a.k);
            y = a.mean;
        } else if (report.kind == "algorithms") {
            series_name = a.algorithm;
            x = a.dataset;
            y = a.mean;
        } else if (report.kind == "time") {
            series_name = a.algorithm;
            x = std::to_string(a.k);
            y = a.median;
        } else {
            series_name = a.algorithm;
            x = std::to_string(a.k);
            y = a.mean;
        }
        auto& series = by_name[series_name];
        series.name = series_name;
        series.points.emplace_back(std::move(x), y);
    }
    std::vector<PlotSeries> out;
    out.reserve(by_name.size());
    for (auto& [name, series] : by_name) out.push_back(std::move(series));
    return out;
}

std::vector<std::filesystem::path> emit(const BenchReport& report, ReportFormat format,
                                        const std::filesystem::path& path) {
    std::vector<std::filesystem::path> written;
    if (format == ReportFormat::plotdata) {
        for (const auto& series : plot_series(report)) {
            std::filesystem::path file = path;
            file += "." + series.name + ".dat";
            std::ofstream out(file);
            if (!out) throw IoError("cannot write " + file.string());
            out << "# " << report.kind << " " << series.name << "\n";
            for (const auto& [x, y] : series.points) out << x << "\t" << number(y) << "\n";
            written.push_back(std::move(file));
        }
        return written;
    }

    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    if (format == ReportFormat::csv)
        write_csv(report, out);
    else
        out << to_json(report).dump(2) << "\n";
    written.push_back(path);
    return written;
}

nlohmann::json cluster_result_json(const Dataset& d, const ClusteringResult& result,
                                   Algorithm algo, Metric metric, std::size_t k,
                                   std::uint64_t seed, DbVariant variant,
                                   Normalize normalize_mode) {
    nlohmann::json j;
    j["schema"] = 1;
    j["dataset"] = {{"name", d.name}, {"n", d.n()}, {"p", d.p()}};
    j["algorithm"] = to_string(algo);
    j["metric"] = to_string(metric);
    j["k"] = k;
    j["seed"] = seed;
    j["normalize"] = to_string(normalize_mode);
    j["db_variant"] = to_string(variant);
    if (k >= 2) {
        try {
            j["db_index"] = davies_bouldin(d, result.assignments, result.centroids, variant).index;
        } catch (const DegeneracyError&) {
            j["db_index"] = nullptr;  // degenerate geometry, index undefined
        }
    } else {
        j["db_index"] = nullptr;
    }
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    j["inertia_history"] = result.inertia_history;
    j["assignments"] = result.assignments;
    auto centroids = nlohmann::json::array();
    for (std::size_t c = 0; c < result.centroids.rows(); ++c) {
        auto row = nlohmann::json::array();
        for (std::size_t f = 0; f < result.centroids.cols(); ++f)
            row.push_back(result.centroids(c, f));
        centroids.push_back(std::move(row));
    }
    j["centroids"] = std::move(centroids);
    j["elapsed_ms"] = result.elapsed.count();
    return j;
}

}  // namespace kmlab
