#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmlab/clustering.hpp"
#include "kmlab/dataset.hpp"
#include "kmlab/distance.hpp"
#include "kmlab/validity.hpp"

namespace kmlab {

enum class Algorithm { kmeans, swkmeans, dwkmeans, renovated };

/// One clustering execution inside a sweep.
struct BenchRecord {
    std::string dataset;
    Algorithm algorithm = Algorithm::kmeans;
    Metric metric = Metric::euclidean;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    double db_index = 0.0;
    DbVariant db_variant = DbVariant::paper;
    std::size_t iterations = 0;
    double elapsed_ms = 0.0;
    bool converged = false;
    Normalize normalize = Normalize::none;

    bool operator==(const BenchRecord&) const = default;
};

/// One aggregate cell: summary statistics of `value_field` over the records
/// matching the populated group fields (empty string / k = 0 means the field
/// does not participate in the grouping).
struct BenchAggregate {
    std::string dataset;
    std::string algorithm;
    std::string metric;
    std::size_t k = 0;
    std::string value_field;  // db_index | elapsed_ms | iterations
    std::size_t count = 0;
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
    std::optional<double> vs_kmeans;  // time sweeps: median / plain K-Means median at same k
};

struct BenchReport {
    int schema = 1;
    std::string kind;  // distance-sweep | algorithms | time | iterations
    std::string environment;
    std::string timestamp;
    bool partial = false;   // a cell failed and the sweep was cut short
    std::string error;      // the failure message when partial
    std::vector<BenchRecord> records;
    std::vector<BenchAggregate> aggregates;
};

struct BenchOptions {
    std::size_t seeds = 30;  // seed values 1..seeds for random-init algorithms
    Normalize normalize = Normalize::none;
    DbVariant db_variant = DbVariant::paper;
    Metric metric = Metric::euclidean;
    double static_weight = 1.5;
    double tol = 1e-6;
    std::size_t max_iter = 300;
};

/// Plain K-Means under each of the three metrics for every k in
/// [k_min, k_max], recording the final index value; aggregates are
/// (metric, k) cells.
BenchReport bench_distance_sweep(const Dataset& d, std::size_t k_min, std::size_t k_max,
                                 const BenchOptions& options);

/// All four algorithms on each dataset at a fixed k. The deterministic
/// algorithm contributes a single record per dataset; the random-init ones
/// contribute one per seed. Aggregates are (dataset, algorithm) cells.
BenchReport bench_algorithms(const std::vector<Dataset>& datasets, std::size_t k,
                             const BenchOptions& options);

/// Wall-clock (clustering only) for the four algorithms across k_list;
/// every algorithm is executed once per seed so medians are comparable.
/// Aggregates are (algorithm, k) cells including time relative to plain
/// K-Means.
BenchReport bench_time(const Dataset& d, const std::vector<std::size_t>& k_list,
                       const BenchOptions& options);

/// Iterations-to-convergence for the four algorithms for every k in
/// [k_min, k_max]; aggregates are (algorithm, k) cells.
BenchReport bench_iterations(const Dataset& d, std::size_t k_min, std::size_t k_max,
                             const BenchOptions& options);

/// Single clustering execution used by every sweep: picks initialization
/// and weighting from the algorithm name and computes the index value.
BenchRecord run_cell(const Dataset& d, std::string_view dataset_name, Algorithm algo,
                     Metric metric, std::size_t k, std::uint64_t seed,
                     const BenchOptions& options);

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

/// "<os> <arch>, <compiler>" for report provenance.
std::string host_environment();

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace kmlab
