#include "kmlab/distance.hpp"

#include <cmath>

#include "kmlab/error.hpp"

namespace kmlab {

double distance(Metric m, std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw InvalidArgument("distance: dimension mismatch (" + std::to_string(x.size()) +
                              " vs " + std::to_string(y.size()) + ")");
    switch (m) {
        case Metric::manhattan: {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
            return sum;
        }
        case Metric::euclidean: {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double diff = x[i] - y[i];
                sum += diff * diff;
            }
            return std::sqrt(sum);
        }
        case Metric::chebyshev: {
            double best = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                best = std::max(best, std::abs(x[i] - y[i]));
            return best;
        }
    }
    return 0.0;
}

DistanceMatrix pairwise(Metric m, const Dataset& d) {
    const std::size_t n = d.n();
    DistanceMatrix dm{Matrix(n, n), m};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = distance(m, d.features.row(i), d.features.row(j));
            dm.entries(i, j) = v;
            dm.entries(j, i) = v;
        }
    }
    return dm;
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::manhattan: return "manhattan";
        case Metric::euclidean: return "euclidean";
        case Metric::chebyshev: return "chebyshev";
    }
    return "euclidean";
}

Metric metric_from_string(std::string_view s) {
    if (s == "manhattan") return Metric::manhattan;
    if (s == "euclidean") return Metric::euclidean;
    if (s == "chebyshev") return Metric::chebyshev;
    throw InvalidArgument("unknown metric: " + std::string(s));
}

}  // namespace kmlab
