#include "kmlab/validity.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "kmlab/error.hpp"

namespace kmlab {

namespace {

double squared_euclidean(std::span<const double> x, std::span<const double> y) {
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - y[j];
        sum += diff * diff;
    }
    return sum;
}

}  // namespace

double dispersion(const Matrix& members, std::span<const double> centroid) {
    if (members.rows() == 0) throw InvalidArgument("dispersion: empty cluster");
    double sum = 0.0;
    for (std::size_t i = 0; i < members.rows(); ++i)
        sum += squared_euclidean(members.row(i), centroid);
    return std::sqrt(sum / static_cast<double>(members.rows()));
}

DbBreakdown davies_bouldin(const Dataset& d, std::span<const std::size_t> assignments,
                           const Matrix& centroids, DbVariant v) {
    const std::size_t k = centroids.rows();
    if (k < 2) throw InvalidArgument("davies_bouldin: undefined for k < 2");
    if (assignments.size() != d.n())
        throw InvalidArgument("davies_bouldin: assignment length mismatch");

    std::vector<std::size_t> counts(k, 0);
    std::vector<double> sums(k, 0.0);
    for (std::size_t i = 0; i < d.n(); ++i) {
        const std::size_t c = assignments[i];
        if (c >= k) throw InvalidArgument("davies_bouldin: cluster index out of range");
        ++counts[c];
        sums[c] += squared_euclidean(d.features.row(i), centroids.row(c));
    }

    DbBreakdown out;
    out.dispersions.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] == 0)
            throw InvalidArgument("davies_bouldin: cluster " + std::to_string(c) + " is empty");
        out.dispersions[c] = std::sqrt(sums[c] / static_cast<double>(counts[c]));
    }

    out.similarity = Matrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double sq = squared_euclidean(centroids.row(i), centroids.row(j));
            if (sq == 0.0)
                throw DegeneracyError("davies_bouldin: centroids " + std::to_string(i) +
                                      " and " + std::to_string(j) + " coincide");
            const double separation = v == DbVariant::paper ? sq : std::sqrt(sq);
            const double ratio = (out.dispersions[i] + out.dispersions[j]) / separation;
            out.similarity(i, j) = ratio;
            out.similarity(j, i) = ratio;
        }
    }

    out.per_cluster_max.resize(k);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double worst = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) worst = std::max(worst, out.similarity(i, j));
        out.per_cluster_max[i] = worst;
        total += worst;
    }
    out.index = total / static_cast<double>(k);
    return out;
}

double within_cluster_sse(const Dataset& d, std::span<const std::size_t> assignments,
                          const Matrix& centroids) {
    if (assignments.size() != d.n())
        throw InvalidArgument("within_cluster_sse: assignment length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < d.n(); ++i) {
        if (assignments[i] >= centroids.rows())
            throw InvalidArgument("within_cluster_sse: cluster index out of range");
        sum += squared_euclidean(d.features.row(i), centroids.row(assignments[i]));
    }
    return sum;
}

double partition_agreement(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size())
        throw InvalidArgument("partition_agreement: length mismatch (" +
                              std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    const std::size_t n = a.size();
    if (n == 0) throw InvalidArgument("partition_agreement: empty labelings");

    auto compact = [](std::span<const std::size_t> labels) {
        std::unordered_map<std::size_t, std::size_t> ids;
        std::vector<std::size_t> out(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
            out[i] = it->second;
        }
        return std::pair{std::move(out), ids.size()};
    };
    const auto [la, ka] = compact(a);
    const auto [lb, kb] = compact(b);

    Matrix contingency(ka, kb);
    std::vector<double> row_sums(ka, 0.0), col_sums(kb, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        contingency(la[i], lb[i]) += 1.0;
        row_sums[la[i]] += 1.0;
        col_sums[lb[i]] += 1.0;
    }

    auto choose2 = [](double m) { return m * (m - 1.0) / 2.0; };
    double sum_cells = 0.0;
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < kb; ++j) sum_cells += choose2(contingency(i, j));
    double sum_rows = 0.0, sum_cols = 0.0;
    for (double s : row_sums) sum_rows += choose2(s);
    for (double s : col_sums) sum_cols += choose2(s);

    const double total_pairs = choose2(static_cast<double>(n));
    const double expected = total_pairs > 0 ? sum_rows * sum_cols / total_pairs : 0.0;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return 1.0;  // both partitions trivial
    return (sum_cells - expected) / (maximum - expected);
}

std::vector<std::size_t> encode_labels(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> ids;
    std::vector<std::size_t> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
        out[i] = it->second;
    }
    return out;
}

std::string_view to_string(DbVariant v) {
    return v == DbVariant::paper ? "paper" : "standard";
}

DbVariant db_variant_from_string(std::string_view s) {
    if (s == "paper") return DbVariant::paper;
    if (s == "standard") return DbVariant::standard;
    throw InvalidArgument("unknown db variant: " + std::string(s));
}

}  // namespace kmlab
