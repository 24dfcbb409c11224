#include "kmlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>

#include "kmlab/error.hpp"

namespace kmlab {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::kmeans, Algorithm::swkmeans,
                                        Algorithm::dwkmeans, Algorithm::renovated};

struct GroupKey {
    std::string dataset;
    std::string algorithm;
    std::string metric;
    std::size_t k;
    auto operator<=>(const GroupKey&) const = default;
};

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    return m % 2 == 1 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

/// Groups records by the named fields and summarizes `value_field`.
std::vector<BenchAggregate> aggregate(const std::vector<BenchRecord>& records,
                                      bool by_dataset, bool by_algorithm, bool by_metric,
                                      bool by_k, const std::string& value_field) {
    std::map<GroupKey, std::vector<double>> groups;
    for (const auto& r : records) {
        GroupKey key{by_dataset ? r.dataset : "",
                     by_algorithm ? std::string(to_string(r.algorithm)) : "",
                     by_metric ? std::string(to_string(r.metric)) : "", by_k ? r.k : 0};
        double value = 0.0;
        if (value_field == "db_index") value = r.db_index;
        else if (value_field == "elapsed_ms") value = r.elapsed_ms;
        else value = static_cast<double>(r.iterations);
        groups[key].push_back(value);
    }

    std::vector<BenchAggregate> out;
    for (const auto& [key, values] : groups) {
        BenchAggregate agg;
        agg.dataset = key.dataset;
        agg.algorithm = key.algorithm;
        agg.metric = key.metric;
        agg.k = key.k;
        agg.value_field = value_field;
        agg.count = values.size();
        agg.min = *std::min_element(values.begin(), values.end());
        agg.max = *std::max_element(values.begin(), values.end());
        double total = 0.0;
        for (double v : values) total += v;
        agg.mean = total / static_cast<double>(values.size());
        agg.median = median_of(values);
        out.push_back(std::move(agg));
    }
    return out;
}

BenchReport make_report(std::string kind) {
    BenchReport report;
    report.kind = std::move(kind);
    report.environment = host_environment();
    report.timestamp = utc_timestamp();
    return report;
}

std::string dataset_label(const Dataset& d) {
    // The provenance string is "<source>[file] n=.. p=.."; the short source
    // name is what table rows want.
    const auto bracket = d.name.find('[');
    return bracket == std::string::npos ? d.name : d.name.substr(0, bracket);
}

}  // namespace

BenchRecord run_cell(const Dataset& d, std::string_view dataset_name, Algorithm algo,
                     Metric metric, std::size_t k, std::uint64_t seed,
                     const BenchOptions& options) {
    InitStrategy init;
    WeightStrategy weights;
    switch (algo) {
        case Algorithm::kmeans:
            init = {InitKind::random, seed, metric};
            break;
        case Algorithm::swkmeans:
            init = {InitKind::random, seed, metric};
            weights = {WeightKind::constant, options.static_weight};
            break;
        case Algorithm::dwkmeans:
            init = {InitKind::random, seed, metric};
            weights.kind = WeightKind::dynamic;
            break;
        case Algorithm::renovated:
            init = {InitKind::renovated, seed, metric};
            break;
    }

    const ClusteringResult result =
        run(d, k, init, metric, weights, {options.tol, options.max_iter});

    BenchRecord record;
    record.dataset = std::string(dataset_name);
    record.algorithm = algo;
    record.metric = metric;
    record.k = k;
    record.seed = seed;
    record.db_variant = options.db_variant;
    record.db_index =
        k >= 2
            ? davies_bouldin(d, result.assignments, result.centroids, options.db_variant).index
            : 0.0;
    record.iterations = result.iterations;
    record.elapsed_ms = result.elapsed.count();
    record.converged = result.converged;
    record.normalize = options.normalize;
    return record;
}

BenchReport bench_distance_sweep(const Dataset& raw, std::size_t k_min, std::size_t k_max,
                                 const BenchOptions& options) {
    if (k_min < 2 || k_min > k_max)
        throw InvalidArgument("distance sweep: need 2 <= k_min <= k_max");
    if (options.seeds < 1) throw InvalidArgument("distance sweep: need at least one seed");
    const Dataset d = normalize(raw, options.normalize);
    const std::string label = dataset_label(d);

    BenchReport report = make_report("distance-sweep");
    try {
        for (Metric metric : {Metric::manhattan, Metric::euclidean, Metric::chebyshev})
            for (std::size_t k = k_min; k <= k_max; ++k)
                for (std::uint64_t seed = 1; seed <= options.seeds; ++seed)
                    report.records.push_back(
                        run_cell(d, label, Algorithm::kmeans, metric, k, seed, options));
    } catch (const Error& e) {
        report.partial = true;
        report.error = e.what();
    }
    report.aggregates = aggregate(report.records, false, false, true, true, "db_index");
    return report;
}

BenchReport bench_algorithms(const std::vector<Dataset>& datasets, std::size_t k,
                             const BenchOptions& options) {
    if (datasets.empty()) throw InvalidArgument("algorithms sweep: no datasets");
    if (options.seeds < 1) throw InvalidArgument("algorithms sweep: need at least one seed");
    BenchReport report = make_report("algorithms");
    try {
        for (const Dataset& raw : datasets) {
            const Dataset d = normalize(raw, options.normalize);
            const std::string label = dataset_label(d);
            for (Algorithm algo : kAllAlgorithms) {
                if (algo == Algorithm::renovated) {
                    report.records.push_back(run_cell(d, label, algo, options.metric, k,
                                                      0, options));
                } else {
                    for (std::uint64_t seed = 1; seed <= options.seeds; ++seed)
                        report.records.push_back(
                            run_cell(d, label, algo, options.metric, k, seed, options));
                }
            }
        }
    } catch (const Error& e) {
        report.partial = true;
        report.error = e.what();
    }
    report.aggregates = aggregate(report.records, true, true, false, false, "db_index");
    return report;
}

BenchReport bench_time(const Dataset& raw, const std::vector<std::size_t>& k_list,
                       const BenchOptions& options) {
    if (k_list.empty()) throw InvalidArgument("time sweep: empty k list");
    if (options.seeds < 1) throw InvalidArgument("time sweep: need at least one seed");
    const Dataset d = normalize(raw, options.normalize);
    const std::string label = dataset_label(d);

    BenchReport report = make_report("time");
    try {
        // Timing cells run strictly one at a time; every algorithm repeats
        // once per seed so the medians are over equal sample counts (the
        // deterministic algorithm's repeats time the same computation).
        for (Algorithm algo : kAllAlgorithms)
            for (std::size_t k : k_list)
                for (std::uint64_t seed = 1; seed <= options.seeds; ++seed)
                    report.records.push_back(
                        run_cell(d, label, algo, options.metric, k, seed, options));
    } catch (const Error& e) {
        report.partial = true;
        report.error = e.what();
    }
    report.aggregates = aggregate(report.records, false, true, false, true, "elapsed_ms");

    // Relative cost: median over the plain K-Means median at the same k.
    std::map<std::size_t, double> baseline;
    for (const auto& agg : report.aggregates)
        if (agg.algorithm == to_string(Algorithm::kmeans)) baseline[agg.k] = agg.median;
    for (auto& agg : report.aggregates) {
        const auto it = baseline.find(agg.k);
        if (it != baseline.end() && it->second > 0) agg.vs_kmeans = agg.median / it->second;
    }
    return report;
}

BenchReport bench_iterations(const Dataset& raw, std::size_t k_min, std::size_t k_max,
                             const BenchOptions& options) {
    if (k_min < 2 || k_min > k_max)
        throw InvalidArgument("iterations sweep: need 2 <= k_min <= k_max");
    if (options.seeds < 1) throw InvalidArgument("iterations sweep: need at least one seed");
    const Dataset d = normalize(raw, options.normalize);
    const std::string label = dataset_label(d);

    BenchReport report = make_report("iterations");
    try {
        for (Algorithm algo : kAllAlgorithms)
            for (std::size_t k = k_min; k <= k_max; ++k)
                for (std::uint64_t seed = 1; seed <= options.seeds; ++seed)
                    report.records.push_back(
                        run_cell(d, label, algo, options.metric, k, seed, options));
    } catch (const Error& e) {
        report.partial = true;
        report.error = e.what();
    }
    report.aggregates = aggregate(report.records, false, true, false, true, "iterations");
    return report;
}

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::kmeans: return "kmeans";
        case Algorithm::swkmeans: return "swkmeans";
        case Algorithm::dwkmeans: return "dwkmeans";
        case Algorithm::renovated: return "renovated";
    }
    return "kmeans";
}

Algorithm algorithm_from_string(std::string_view s) {
    if (s == "kmeans") return Algorithm::kmeans;
    if (s == "swkmeans") return Algorithm::swkmeans;
    if (s == "dwkmeans") return Algorithm::dwkmeans;
    if (s == "renovated") return Algorithm::renovated;
    throw InvalidArgument("unknown algorithm: " + std::string(s));
}

std::string host_environment() {
    std::string os =
#if defined(__linux__)
        "linux";
#elif defined(__APPLE__)
        "macos";
#elif defined(_WIN32)
        "windows";
#else
        "unknown-os";
#endif
    std::string arch =
#if defined(__x86_64__) || defined(_M_X64)
        "x86_64";
#elif defined(__aarch64__)
        "aarch64";
#else
        "unknown-arch";
#endif
#if defined(__clang__)
    const std::string compiler = "clang " + std::to_string(__clang_major__) + "." +
                                 std::to_string(__clang_minor__);
#elif defined(__GNUC__)
    const std::string compiler =
        "gcc " + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#else
    const std::string compiler = "unknown-compiler";
#endif
    return os + " " + arch + ", " + compiler;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace kmlab
