#pragma once

#include <span>
#include <string_view>

#include "kmlab/dataset.hpp"
#include "kmlab/matrix.hpp"

namespace kmlab {

enum class Metric { manhattan, euclidean, chebyshev };

/// Symmetric all-pairs distances with a zero diagonal.
struct DistanceMatrix {
    Matrix entries;  // n x n
    Metric metric = Metric::euclidean;
};

/// Evaluates the metric on two vectors of equal dimension. Sums accumulate
/// left to right over features so results are reproducible bit for bit.
/// Throws InvalidArgument on dimension mismatch.
double distance(Metric m, std::span<const double> x, std::span<const double> y);

/// Distances between every pair of objects in the dataset.
DistanceMatrix pairwise(Metric m, const Dataset& d);

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);

}  // namespace kmlab
