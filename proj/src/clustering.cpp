#include "kmlab/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kmlab/error.hpp"

namespace kmlab {

namespace {

double weighted_distance(Metric m, std::span<const double> x, std::span<const double> c,
                         std::span<const double> w) {
    switch (m) {
        case Metric::manhattan: {
            double sum = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) sum += std::abs(w[j] * (x[j] - c[j]));
            return sum;
        }
        case Metric::euclidean: {
            double sum = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double diff = w[j] * (x[j] - c[j]);
                sum += diff * diff;
            }
            return std::sqrt(sum);
        }
        case Metric::chebyshev: {
            double best = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j)
                best = std::max(best, std::abs(w[j] * (x[j] - c[j])));
            return best;
        }
    }
    return 0.0;
}

double squared_euclidean(std::span<const double> x, std::span<const double> y) {
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - y[j];
        sum += diff * diff;
    }
    return sum;
}

// Means per cluster; empty clusters are re-seeded to the point farthest from
// its own centroid, stealing only from clusters with at least two members.
// Reseeds update `assignments` so every cluster is nonempty afterwards.
Matrix update_step(const Dataset& d, std::vector<std::size_t>& assignments, std::size_t k) {
    const std::size_t n = d.n();
    const std::size_t p = d.p();

    auto recompute = [&] {
        Matrix centroids(k, p);
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t c = assignments[i];
            ++counts[c];
            for (std::size_t j = 0; j < p; ++j) centroids(c, j) += d.features(i, j);
        }
        for (std::size_t c = 0; c < k; ++c)
            if (counts[c] > 0)
                for (std::size_t j = 0; j < p; ++j)
                    centroids(c, j) /= static_cast<double>(counts[c]);
        return std::pair{std::move(centroids), std::move(counts)};
    };

    auto [centroids, counts] = recompute();
    bool reseeded = false;
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] > 0) continue;
        double best = -1.0;
        std::size_t best_point = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[assignments[i]] < 2) continue;  // would empty another cluster
            const double dist = squared_euclidean(d.features.row(i),
                                                  centroids.row(assignments[i]));
            if (dist > best) {
                best = dist;
                best_point = i;
            }
        }
        if (best_point == n)
            throw DegeneracyError("update_centroids: cannot re-seed empty cluster");
        --counts[assignments[best_point]];
        assignments[best_point] = c;
        counts[c] = 1;
        reseeded = true;
    }
    if (reseeded) centroids = recompute().first;
    return centroids;
}

}  // namespace

WeightMatrix dynamic_weights(const Matrix& centroids) {
    WeightMatrix w(centroids.rows(), centroids.cols());
    for (std::size_t i = 0; i < centroids.rows(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < centroids.cols(); ++j) sum += centroids(i, j);
        for (std::size_t j = 0; j < centroids.cols(); ++j)
            w(i, j) = sum == 0.0 ? 1.0 : (sum - centroids(i, j)) / sum;
    }
    return w;
}

WeightMatrix weight_matrix(const WeightStrategy& w, const Matrix& centroids) {
    switch (w.kind) {
        case WeightKind::unit:
            return Matrix(centroids.rows(), centroids.cols(), 1.0);
        case WeightKind::constant:
            return Matrix(centroids.rows(), centroids.cols(), w.constant_value);
        case WeightKind::dynamic:
            return dynamic_weights(centroids);
    }
    return Matrix(centroids.rows(), centroids.cols(), 1.0);
}

std::vector<std::size_t> assign(const Dataset& d, const ClusterModel& model) {
    const std::size_t k = model.centroids.rows();
    if (model.centroids.cols() != d.p())
        throw InvalidArgument("assign: centroid dimension " +
                              std::to_string(model.centroids.cols()) + " != dataset p=" +
                              std::to_string(d.p()));
    if (model.weights.rows() != k || model.weights.cols() != d.p())
        throw InvalidArgument("assign: weight matrix shape mismatch");

    std::vector<std::size_t> assignments(d.n());
    for (std::size_t i = 0; i < d.n(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_c = 0;
        for (std::size_t c = 0; c < k; ++c) {
            const double dist = weighted_distance(model.metric, d.features.row(i),
                                                  model.centroids.row(c), model.weights.row(c));
            if (dist < best) {  // strict: ties keep the lower index
                best = dist;
                best_c = c;
            }
        }
        assignments[i] = best_c;
    }
    return assignments;
}

Matrix update_centroids(const Dataset& d, std::span<const std::size_t> assignments,
                        std::size_t k) {
    if (assignments.size() != d.n())
        throw InvalidArgument("update_centroids: assignment length mismatch");
    for (std::size_t a : assignments)
        if (a >= k) throw InvalidArgument("update_centroids: cluster index out of range");
    std::vector<std::size_t> scratch(assignments.begin(), assignments.end());
    return update_step(d, scratch, k);
}

ClusteringResult run(const Dataset& d, std::size_t k, const InitStrategy& init,
                     Metric metric, const WeightStrategy& weights,
                     const RunOptions& options) {
    const std::size_t n = d.n();
    if (k < 1) throw InvalidArgument("run: k must be >= 1");
    if (k > n)
        throw DegeneracyError("run: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    if (options.tol < 0) throw InvalidArgument("run: tol must be >= 0");
    if (options.max_iter < 1) throw InvalidArgument("run: max_iter must be >= 1");

    const auto start = std::chrono::steady_clock::now();

    Matrix centroids = init.kind == InitKind::random
                           ? random_init(d, k, init.seed)
                           : renovated_init(d, k, init.metric).centroids;

    // Constant strategies are materialized once; dynamic weights are rebuilt
    // from the current centroids at the top of every iteration.
    WeightMatrix active_weights = weight_matrix(weights, centroids);

    ClusteringResult result;
    std::vector<std::size_t> previous;
    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
        if (weights.kind == WeightKind::dynamic) active_weights = dynamic_weights(centroids);
        std::vector<std::size_t> assignments = assign(d, {centroids, active_weights, metric});
        const Matrix updated = update_step(d, assignments, k);
        ++result.iterations;

        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sse += squared_euclidean(d.features.row(i), updated.row(assignments[i]));
        result.inertia_history.push_back(sse);

        double displacement = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            displacement = std::max(
                displacement, std::sqrt(squared_euclidean(centroids.row(c), updated.row(c))));

        const bool stable = !previous.empty() && assignments == previous;
        previous = std::move(assignments);
        centroids = updated;
        if (stable || displacement <= options.tol) {
            result.converged = true;
            break;
        }
    }

    result.assignments = std::move(previous);
    result.centroids = std::move(centroids);
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace kmlab
