#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "kmlab/dataset.hpp"
#include "kmlab/distance.hpp"
#include "kmlab/init.hpp"
#include "kmlab/matrix.hpp"

namespace kmlab {

enum class WeightKind {
    unit,      // plain K-Means, all weights 1
    constant,  // "static" weighting: every weight equals a fixed value
    dynamic,   // per-centroid weights recomputed from the current centroids
};

struct WeightStrategy {
    WeightKind kind = WeightKind::unit;
    double constant_value = 1.5;  // used by WeightKind::constant
};

/// One k x p weight row per centroid, applied elementwise inside the
/// assignment distance.
using WeightMatrix = Matrix;

struct ClusterModel {
    Matrix centroids;      // k x p
    WeightMatrix weights;  // k x p
    Metric metric = Metric::euclidean;
};

/// Dynamic weights: for centroid row c with feature sum s, the weight of
/// feature j is (s - c_j) / s. A zero-sum row falls back to unit weights.
/// Weights may be negative or exceed 1 when centroid coordinates do.
WeightMatrix dynamic_weights(const Matrix& centroids);

/// Materializes the strategy against a centroid matrix.
WeightMatrix weight_matrix(const WeightStrategy& w, const Matrix& centroids);

/// Nearest-centroid assignment under the model's metric, applied to the
/// elementwise product weight_row * (x - centroid). Ties break to the lower
/// centroid index.
std::vector<std::size_t> assign(const Dataset& d, const ClusterModel& model);

/// Arithmetic mean per cluster. An empty cluster is re-seeded to the point
/// farthest (Euclidean) from its own new centroid, drawn from clusters that
/// can spare a point.
Matrix update_centroids(const Dataset& d, std::span<const std::size_t> assignments,
                        std::size_t k);

struct ClusteringResult {
    std::vector<std::size_t> assignments;  // n entries in [0, k)
    Matrix centroids;                      // k x p
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> inertia_history;   // Euclidean SSE after each update
    std::chrono::duration<double, std::milli> elapsed{0.0};
};

struct RunOptions {
    double tol = 1e-6;          // max centroid displacement for convergence
    std::size_t max_iter = 300;
};

/// The full iterative engine: initialize, then alternate assignment and
/// centroid update until assignments stabilize, centroids move at most
/// `tol`, or `max_iter` is hit (the only converged=false outcome). Dynamic
/// weights are recomputed from the current centroids every iteration; the
/// inertia history is always unweighted Euclidean SSE so that curves are
/// comparable across weighting strategies. Every cluster is nonempty on
/// return. Elapsed time covers initialization and the loop, no I/O.
ClusteringResult run(const Dataset& d, std::size_t k, const InitStrategy& init,
                     Metric metric, const WeightStrategy& weights,
                     const RunOptions& options = {});

}  // namespace kmlab
