#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kmlab/matrix.hpp"

namespace kmlab {

/// An in-memory numeric dataset: n objects by p attributes, all finite,
/// with optional per-object class labels. Immutable by convention once built.
struct Dataset {
    Matrix features;                  // n x p
    std::vector<std::string> labels;  // empty, or exactly n entries
    std::string name;                 // provenance: source + observed n/p

    std::size_t n() const { return features.rows(); }
    std::size_t p() const { return features.cols(); }
    bool has_labels() const { return !labels.empty(); }

    bool operator==(const Dataset&) const = default;
};

/// How to slice a delimited text file into features and labels.
/// A negative label column counts from the back (-1 = last column).
struct DatasetPreset {
    std::string name = "custom";
    std::optional<char> delimiter = ',';  // nullopt: split on whitespace runs
    std::optional<int> label_column;      // nullopt: no label column
    std::vector<std::size_t> dropped_columns;
};

/// Presets for the bundled UCI-format files: iris, ecoli, yeast, wine.
/// Throws InvalidArgument for unknown names.
DatasetPreset preset_for(std::string_view name);

/// Loads a delimited numeric file. Feature cells must parse as finite reals;
/// all rows must have the same column count. Row order is preserved.
Dataset load_csv(const std::filesystem::path& path, const DatasetPreset& preset = {});

enum class Normalize { none, minmax, zscore };

/// Per-column rescaling. minmax maps each column onto [0,1]; zscore centers
/// to mean 0 and population sd 1 (divisor n). Constant columns map to 0
/// under both modes (zscore additionally warns on stderr). none is identity.
Dataset normalize(const Dataset& d, Normalize mode);

/// Synthesizes k isotropic Gaussian blobs with centers pairwise at least
/// `separation` apart, `per_cluster` points each, labels = blob index.
/// Deterministic for a fixed seed.
Dataset make_blobs(std::size_t k, std::size_t per_cluster, std::size_t dims,
                   double separation, double spread, std::uint64_t seed);

std::string_view to_string(Normalize mode);
Normalize normalize_from_string(std::string_view s);

}  // namespace kmlab
