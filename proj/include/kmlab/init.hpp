#pragma once

#include <cstdint>
#include <vector>

#include "kmlab/dataset.hpp"
#include "kmlab/distance.hpp"
#include "kmlab/matrix.hpp"

namespace kmlab {

enum class InitKind { random, renovated };

/// How initial centroids are produced. `seed` feeds the random strategy
/// only; the renovated strategy is deterministic and ignores it. `metric`
/// feeds the renovated strategy's pairwise distances (Euclidean by default).
struct InitStrategy {
    InitKind kind = InitKind::random;
    std::uint64_t seed = 0;
    Metric metric = Metric::euclidean;
};

/// Intermediate quantities of the deterministic initializer, exposed for
/// inspection: the column-normalized pairwise-distance matrix and the
/// per-object sum of its squared column entries.
struct InitScore {
    std::vector<double> scores;  // scores[j] = sum_i normalized(i,j)^2
    Matrix normalized;           // n x n, each column sums to 1
};

struct RenovatedInit {
    Matrix centroids;                   // k x p, ordered by ascending score
    std::vector<std::size_t> selected;  // object indices, same order
    InitScore score;
};

/// Copies k distinct objects chosen uniformly without replacement.
/// Deterministic for a fixed seed. Throws DegeneracyError when k > n.
Matrix random_init(const Dataset& d, std::size_t k, std::uint64_t seed);

/// Deterministic seeding: column-normalize the pairwise distances, score
/// each object by the sum of squared column entries, and pick the k objects
/// with the smallest scores (ties go to the lower row index).
/// Throws DegeneracyError when k > n, n < 2, or all objects are identical.
RenovatedInit renovated_init(const Dataset& d, std::size_t k, Metric m = Metric::euclidean);

}  // namespace kmlab
