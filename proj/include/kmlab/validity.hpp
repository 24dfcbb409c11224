#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmlab/dataset.hpp"
#include "kmlab/matrix.hpp"

namespace kmlab {

/// The two readings of the Davies-Bouldin separation term: `paper` divides
/// by the squared Euclidean centroid distance, `standard` by the plain one.
enum class DbVariant { paper, standard };

struct DbBreakdown {
    std::vector<double> dispersions;      // RMS radius per cluster
    Matrix similarity;                    // (dispersion_i + dispersion_j) / separation_ij
    std::vector<double> per_cluster_max;  // worst-case similarity per cluster
    double index = 0.0;                   // mean of per_cluster_max
};

/// Root-mean-square Euclidean distance of the members to the centroid.
/// Throws InvalidArgument for an empty member matrix.
double dispersion(const Matrix& members, std::span<const double> centroid);

/// Full Davies-Bouldin breakdown. Requires k >= 2, every cluster nonempty,
/// and pairwise-distinct centroids (coincident centroids are a
/// DegeneracyError). Smaller index values indicate better clusterings.
DbBreakdown davies_bouldin(const Dataset& d, std::span<const std::size_t> assignments,
                           const Matrix& centroids, DbVariant v);

/// Sum over objects of the squared Euclidean distance to the assigned
/// centroid.
double within_cluster_sse(const Dataset& d, std::span<const std::size_t> assignments,
                          const Matrix& centroids);

/// Adjusted Rand index between two labelings of the same objects; 1.0 iff
/// they are identical up to relabeling. Degenerate agreement (both trivial
/// partitions) also scores 1.0.
double partition_agreement(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Maps string labels to dense indices by first appearance, for feeding
/// ground-truth classes into partition_agreement.
std::vector<std::size_t> encode_labels(const std::vector<std::string>& labels);

std::string_view to_string(DbVariant v);
DbVariant db_variant_from_string(std::string_view s);

}  // namespace kmlab
