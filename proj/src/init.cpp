#include "kmlab/init.hpp"

#include <algorithm>
#include <numeric>

#include "kmlab/error.hpp"
#include "kmlab/rng.hpp"

namespace kmlab {

Matrix random_init(const Dataset& d, std::size_t k, std::uint64_t seed) {
    const std::size_t n = d.n();
    if (k < 1) throw InvalidArgument("random_init: k must be >= 1");
    if (k > n)
        throw DegeneracyError("random_init: k=" + std::to_string(k) + " exceeds n=" +
                              std::to_string(n));

    // Partial Fisher-Yates over the index vector; first k entries are a
    // uniform sample without replacement.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + rng.next_below(n - i)]);

    Matrix centroids(k, d.p());
    for (std::size_t i = 0; i < k; ++i) centroids.set_row(i, d.features.row(idx[i]));
    return centroids;
}

RenovatedInit renovated_init(const Dataset& d, std::size_t k, Metric m) {
    const std::size_t n = d.n();
    if (k < 1) throw InvalidArgument("renovated_init: k must be >= 1");
    if (n < 2) throw DegeneracyError("renovated_init: needs at least 2 objects");
    if (k > n)
        throw DegeneracyError("renovated_init: k=" + std::to_string(k) + " exceeds n=" +
                              std::to_string(n));

    const DistanceMatrix dist = pairwise(m, d);

    RenovatedInit out;
    out.score.normalized = Matrix(n, n);
    out.score.scores.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double column_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) column_sum += dist.entries(i, j);
        if (column_sum == 0.0)
            throw DegeneracyError("renovated_init: all objects identical (zero distances)");
        double score = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double v = dist.entries(i, j) / column_sum;
            out.score.normalized(i, j) = v;
            score += v * v;
        }
        out.score.scores[j] = score;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.score.scores[a] < out.score.scores[b];
    });  // stable sort keeps the lower index first on equal scores

    out.selected.assign(order.begin(), order.begin() + k);
    out.centroids = Matrix(k, d.p());
    for (std::size_t i = 0; i < k; ++i)
        out.centroids.set_row(i, d.features.row(out.selected[i]));
    return out;
}

}  // namespace kmlab
