#include "kmlab/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kmlab/error.hpp"
#include "kmlab/rng.hpp"

namespace kmlab {

namespace {

std::vector<std::string> split_line(const std::string& line, std::optional<char> delim) {
    std::vector<std::string> out;
    if (delim) {
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, *delim)) out.push_back(cell);
        if (!line.empty() && line.back() == *delim) out.emplace_back();
    } else {
        std::istringstream ss(line);
        std::string cell;
        while (ss >> cell) out.push_back(cell);
    }
    return out;
}

std::optional<double> parse_cell(std::string_view cell) {
    const auto begin = cell.find_first_not_of(" \t");
    if (begin == std::string_view::npos) return std::nullopt;
    const auto end = cell.find_last_not_of(" \t");
    cell = cell.substr(begin, end - begin + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

}  // namespace

DatasetPreset preset_for(std::string_view name) {
    if (name == "iris") return {"iris", ',', -1, {}};
    if (name == "wine") return {"wine", ',', 0, {}};
    if (name == "ecoli") return {"ecoli", std::nullopt, -1, {0}};
    if (name == "yeast") return {"yeast", std::nullopt, -1, {0}};
    if (name == "custom") return {};
    throw InvalidArgument("unknown dataset preset: " + std::string(name));
}

Dataset load_csv(const std::filesystem::path& path, const DatasetPreset& preset) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
    std::string line;
    std::size_t line_no = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;  // blank
        auto cells = split_line(line, preset.delimiter);
        if (rows.empty()) {
            width = cells.size();
        } else if (cells.size() != width) {
            throw IoError(path.string() + ": row " + std::to_string(line_no) + " has " +
                          std::to_string(cells.size()) + " columns, expected " +
                          std::to_string(width));
        }
        rows.push_back(std::move(cells));
        line_numbers.push_back(line_no);
    }
    if (rows.empty()) throw IoError(path.string() + ": no data rows");

    std::optional<std::size_t> label_col;
    if (preset.label_column) {
        const int raw = *preset.label_column;
        const long resolved = raw < 0 ? static_cast<long>(width) + raw : raw;
        if (resolved < 0 || resolved >= static_cast<long>(width))
            throw InvalidArgument("label column " + std::to_string(raw) +
                                  " out of range for " + std::to_string(width) + " columns");
        label_col = static_cast<std::size_t>(resolved);
    }
    for (std::size_t c : preset.dropped_columns) {
        if (c >= width)
            throw InvalidArgument("dropped column " + std::to_string(c) + " out of range");
        if (label_col && c == *label_col)
            throw InvalidArgument("label column " + std::to_string(c) + " is also dropped");
    }

    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < width; ++c) {
        if (label_col && c == *label_col) continue;
        if (std::find(preset.dropped_columns.begin(), preset.dropped_columns.end(), c) !=
            preset.dropped_columns.end())
            continue;
        feature_cols.push_back(c);
    }
    if (feature_cols.empty()) throw InvalidArgument("no feature columns remain");

    Dataset d;
    d.features = Matrix(rows.size(), feature_cols.size());
    if (label_col) d.labels.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < feature_cols.size(); ++j) {
            const std::size_t c = feature_cols[j];
            const auto value = parse_cell(rows[r][c]);
            if (!value)
                throw IoError(path.string() + ": row " + std::to_string(line_numbers[r]) +
                              ", column " + std::to_string(c + 1) + ": not a finite number: '" +
                              rows[r][c] + "'");
            d.features(r, j) = *value;
        }
        if (label_col) d.labels.push_back(rows[r][*label_col]);
    }
    d.name = preset.name + "[" + path.filename().string() + "] n=" + std::to_string(d.n()) +
             " p=" + std::to_string(d.p());
    return d;
}

Dataset normalize(const Dataset& d, Normalize mode) {
    if (mode == Normalize::none) return d;

    Dataset out = d;
    const std::size_t n = d.n();
    for (std::size_t c = 0; c < d.p(); ++c) {
        if (mode == Normalize::minmax) {
            double lo = d.features(0, c), hi = d.features(0, c);
            for (std::size_t r = 1; r < n; ++r) {
                lo = std::min(lo, d.features(r, c));
                hi = std::max(hi, d.features(r, c));
            }
            const double range = hi - lo;
            for (std::size_t r = 0; r < n; ++r)
                out.features(r, c) = range > 0 ? (d.features(r, c) - lo) / range : 0.0;
        } else {
            double mean = 0.0;
            for (std::size_t r = 0; r < n; ++r) mean += d.features(r, c);
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                const double dev = d.features(r, c) - mean;
                var += dev * dev;
            }
            const double sd = std::sqrt(var / static_cast<double>(n));  // population sd
            if (sd == 0.0) {
                std::cerr << "kmlab: zscore: column " << c << " is constant, mapped to 0\n";
                for (std::size_t r = 0; r < n; ++r) out.features(r, c) = 0.0;
            } else {
                for (std::size_t r = 0; r < n; ++r)
                    out.features(r, c) = (d.features(r, c) - mean) / sd;
            }
        }
    }
    return out;
}

Dataset make_blobs(std::size_t k, std::size_t per_cluster, std::size_t dims,
                   double separation, double spread, std::uint64_t seed) {
    if (k < 1 || per_cluster < 1 || dims < 1)
        throw InvalidArgument("make_blobs: k, per_cluster and dims must be >= 1");
    if (!(separation > 0) || spread < 0)
        throw InvalidArgument("make_blobs: separation must be > 0 and spread >= 0");

    Rng rng(seed);

    // Centers sit on a random line with gaps of at least `separation`
    // (non-adjacent pairs are farther apart automatically), so the planted
    // partition is unambiguous.
    std::vector<double> direction(dims, 0.0);
    double norm = 0.0;
    while (norm == 0.0) {
        for (auto& x : direction) x = rng.next_normal();
        norm = 0.0;
        for (double x : direction) norm += x * x;
        norm = std::sqrt(norm);
    }
    for (auto& x : direction) x /= norm;

    const double origin = rng.next_double() * separation;
    Matrix centers(k, dims);
    double offset = origin;
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) offset += separation * (1.0 + 0.5 * rng.next_double());
        for (std::size_t c = 0; c < dims; ++c) centers(i, c) = offset * direction[c];
    }

    Dataset d;
    d.features = Matrix(k * per_cluster, dims);
    d.labels.reserve(k * per_cluster);
    std::size_t row = 0;
    for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t i = 0; i < per_cluster; ++i, ++row) {
            for (std::size_t c = 0; c < dims; ++c)
                d.features(row, c) = centers(b, c) + spread * rng.next_normal();
            d.labels.push_back(std::to_string(b));
        }
    }
    d.name = "blobs k=" + std::to_string(k) + " n=" + std::to_string(d.n()) +
             " p=" + std::to_string(dims) + " seed=" + std::to_string(seed);
    return d;
}

std::string_view to_string(Normalize mode) {
    switch (mode) {
        case Normalize::none: return "none";
        case Normalize::minmax: return "minmax";
        case Normalize::zscore: return "zscore";
    }
    return "none";
}

Normalize normalize_from_string(std::string_view s) {
    if (s == "none") return Normalize::none;
    if (s == "minmax") return Normalize::minmax;
    if (s == "zscore") return Normalize::zscore;
    throw InvalidArgument("unknown normalize mode: " + std::string(s));
}

}  // namespace kmlab
