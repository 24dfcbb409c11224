// kmlab: clustering runs and benchmark sweeps over delimited numeric files.
//
// Exit codes: 0 success, 2 usage, 3 file/parse, 4 numeric degeneracy.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmlab/bench.hpp"
#include "kmlab/clustering.hpp"
#include "kmlab/dataset.hpp"
#include "kmlab/error.hpp"
#include "kmlab/report.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;

struct LoadFlags {
    std::vector<std::string> data;
    std::string preset;       // empty: infer from the file stem
    std::string delimiter;    // single char, or "ws" for whitespace runs
    std::optional<int> label_col;
    std::vector<std::size_t> drop_cols;
    std::string normalize = "none";
};

struct RunFlags {
    std::string algo = "kmeans";
    std::string metric = "euclidean";
    std::string db_variant = "paper";
    std::uint64_t seed = 1;
    std::size_t seeds = 30;
    double tol = 1e-6;
    std::size_t max_iter = 300;
    double static_weight = 1.5;
};

struct OutFlags {
    std::string out;
    std::string format = "json";
};

void add_load_flags(CLI::App* cmd, LoadFlags& f, bool multi) {
    auto* data = cmd->add_option("--data", f.data, "input data file (delimited text)")
                     ->required();
    if (!multi) data->expected(1);
    cmd->add_option("--preset", f.preset,
                    "column layout: iris|ecoli|yeast|wine|custom (default: from file stem)");
    cmd->add_option("--delimiter", f.delimiter,
                    "custom layout: field delimiter, or 'ws' for whitespace runs");
    cmd->add_option("--label-col", f.label_col,
                    "custom layout: label column index (negative counts from the end)");
    cmd->add_option("--drop-cols", f.drop_cols, "custom layout: column indices to drop")
        ->delimiter(',');
    cmd->add_option("--normalize", f.normalize, "per-column rescaling: none|minmax|zscore");
}

void add_run_flags(CLI::App* cmd, RunFlags& f, bool single_run) {
    cmd->add_option("--algo", f.algo, "kmeans|swkmeans|dwkmeans|renovated");
    cmd->add_option("--metric", f.metric, "manhattan|euclidean|chebyshev");
    cmd->add_option("--db-variant", f.db_variant, "paper|standard separation term");
    if (single_run)
        cmd->add_option("--seed", f.seed, "seed for random initialization");
    else
        cmd->add_option("--seeds", f.seeds, "number of seeds (values 1..N)");
    cmd->add_option("--tol", f.tol, "centroid displacement tolerance");
    cmd->add_option("--max-iter", f.max_iter, "iteration cap");
    cmd->add_option("--static-weight", f.static_weight, "swkmeans weight value");
}

void add_out_flags(CLI::App* cmd, OutFlags& f) {
    cmd->add_option("--out", f.out, "output path (default: stdout)");
    cmd->add_option("--format", f.format, "csv|json|plotdata");
}

kmlab::DatasetPreset resolve_preset(const std::filesystem::path& path, const LoadFlags& f) {
    kmlab::DatasetPreset preset;
    if (!f.preset.empty() && f.preset != "custom") {
        preset = kmlab::preset_for(f.preset);
    } else if (f.preset.empty()) {
        const std::string stem = path.stem().string();
        for (const char* known : {"iris", "ecoli", "yeast", "wine"})
            if (stem == known) preset = kmlab::preset_for(known);
    }
    if (!f.delimiter.empty()) {
        if (f.delimiter == "ws")
            preset.delimiter = std::nullopt;
        else if (f.delimiter.size() == 1)
            preset.delimiter = f.delimiter[0];
        else
            throw kmlab::InvalidArgument("--delimiter takes one character or 'ws'");
    }
    if (f.label_col) preset.label_column = *f.label_col;
    if (!f.drop_cols.empty()) preset.dropped_columns = f.drop_cols;
    return preset;
}

kmlab::Dataset load_one(const std::string& path, const LoadFlags& f) {
    return kmlab::load_csv(path, resolve_preset(path, f));
}

kmlab::BenchOptions bench_options(const LoadFlags& lf, const RunFlags& rf) {
    kmlab::BenchOptions options;
    options.seeds = rf.seeds;
    options.normalize = kmlab::normalize_from_string(lf.normalize);
    options.db_variant = kmlab::db_variant_from_string(rf.db_variant);
    options.metric = kmlab::metric_from_string(rf.metric);
    options.static_weight = rf.static_weight;
    options.tol = rf.tol;
    options.max_iter = rf.max_iter;
    return options;
}

void write_report(const kmlab::BenchReport& report, const OutFlags& of) {
    const auto format = kmlab::format_from_string(of.format);
    if (of.out.empty()) {
        if (format == kmlab::ReportFormat::plotdata)
            throw kmlab::InvalidArgument("--format plotdata needs --out <stem>");
        if (format == kmlab::ReportFormat::csv)
            kmlab::write_csv(report, std::cout);
        else
            std::cout << kmlab::to_json(report).dump(2) << "\n";
        return;
    }
    for (const auto& file : kmlab::emit(report, format, of.out))
        std::cerr << "wrote " << file.string() << "\n";
}

int run_cluster(const LoadFlags& lf, const RunFlags& rf, const OutFlags& of,
                std::size_t k) {
    const auto algo = kmlab::algorithm_from_string(rf.algo);
    const auto metric = kmlab::metric_from_string(rf.metric);
    const auto normalize_mode = kmlab::normalize_from_string(lf.normalize);
    const auto variant = kmlab::db_variant_from_string(rf.db_variant);

    const kmlab::Dataset d = kmlab::normalize(load_one(lf.data.front(), lf), normalize_mode);

    kmlab::InitStrategy init{kmlab::InitKind::random, rf.seed, metric};
    kmlab::WeightStrategy weights;
    switch (algo) {
        case kmlab::Algorithm::kmeans: break;
        case kmlab::Algorithm::swkmeans:
            weights = {kmlab::WeightKind::constant, rf.static_weight};
            break;
        case kmlab::Algorithm::dwkmeans:
            weights.kind = kmlab::WeightKind::dynamic;
            break;
        case kmlab::Algorithm::renovated:
            init.kind = kmlab::InitKind::renovated;
            break;
    }

    const auto result = kmlab::run(d, k, init, metric, weights, {rf.tol, rf.max_iter});
    const auto j = kmlab::cluster_result_json(d, result, algo, metric, k, rf.seed, variant,
                                              normalize_mode);
    if (of.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(of.out);
        if (!out) throw kmlab::IoError("cannot write " + of.out);
        out << j.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-means variants, validity indices and benchmark sweeps"};
    app.require_subcommand(1);

    // cluster
    LoadFlags cluster_load;
    RunFlags cluster_run;
    OutFlags cluster_out;
    std::size_t cluster_k = 0;
    auto* cluster = app.add_subcommand("cluster", "run one clustering configuration");
    add_load_flags(cluster, cluster_load, false);
    add_run_flags(cluster, cluster_run, true);
    cluster->add_option("--k", cluster_k, "number of clusters")->required()
        ->check(CLI::PositiveNumber);
    cluster->add_option("--out", cluster_out.out, "output path (default: stdout)");

    // bench + subcommands
    auto* bench = app.add_subcommand("bench", "multi-run sweeps with aggregate tables");
    bench->require_subcommand(1);

    LoadFlags sweep_load;
    RunFlags sweep_run;
    OutFlags sweep_out;
    std::size_t k_min = 2, k_max = 10;
    auto* sweep = bench->add_subcommand(
        "distance-sweep", "plain K-Means under all three metrics across a k range");
    add_load_flags(sweep, sweep_load, false);
    add_run_flags(sweep, sweep_run, false);
    add_out_flags(sweep, sweep_out);
    sweep->add_option("--k-min", k_min, "smallest k")->check(CLI::Range(2, 1 << 20));
    sweep->add_option("--k-max", k_max, "largest k");

    LoadFlags algos_load;
    RunFlags algos_run;
    OutFlags algos_out;
    std::size_t algos_k = 5;
    auto* algos = bench->add_subcommand(
        "algorithms", "all four algorithms on each dataset at a fixed k");
    add_load_flags(algos, algos_load, true);
    add_run_flags(algos, algos_run, false);
    add_out_flags(algos, algos_out);
    algos->add_option("--k", algos_k, "number of clusters")->check(CLI::PositiveNumber);

    LoadFlags time_load;
    RunFlags time_run;
    OutFlags time_out;
    std::vector<std::size_t> k_list = {3, 6, 9, 12, 15};
    auto* time_cmd = bench->add_subcommand("time", "wall-clock comparison across k values");
    add_load_flags(time_cmd, time_load, false);
    add_run_flags(time_cmd, time_run, false);
    add_out_flags(time_cmd, time_out);
    time_cmd->add_option("--k-list", k_list, "k values to time")->delimiter(',');

    LoadFlags iter_load;
    RunFlags iter_run;
    OutFlags iter_out;
    std::size_t iter_k_min = 2, iter_k_max = 10;
    auto* iters = bench->add_subcommand(
        "iterations", "iterations-to-convergence across a k range");
    add_load_flags(iters, iter_load, false);
    add_run_flags(iters, iter_run, false);
    add_out_flags(iters, iter_out);
    iters->add_option("--k-min", iter_k_min, "smallest k")->check(CLI::Range(2, 1 << 20));
    iters->add_option("--k-max", iter_k_max, "largest k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (cluster->parsed())
            return run_cluster(cluster_load, cluster_run, cluster_out, cluster_k);
        if (sweep->parsed()) {
            const auto report = kmlab::bench_distance_sweep(
                load_one(sweep_load.data.front(), sweep_load), k_min, k_max,
                bench_options(sweep_load, sweep_run));
            write_report(report, sweep_out);
            return report.partial ? kExitDegenerate : 0;
        }
        if (algos->parsed()) {
            std::vector<kmlab::Dataset> datasets;
            for (const auto& path : algos_load.data)
                datasets.push_back(load_one(path, algos_load));
            const auto report = kmlab::bench_algorithms(datasets, algos_k,
                                                        bench_options(algos_load, algos_run));
            write_report(report, algos_out);
            return report.partial ? kExitDegenerate : 0;
        }
        if (time_cmd->parsed()) {
            const auto report = kmlab::bench_time(load_one(time_load.data.front(), time_load),
                                                  k_list, bench_options(time_load, time_run));
            write_report(report, time_out);
            return report.partial ? kExitDegenerate : 0;
        }
        if (iters->parsed()) {
            const auto report = kmlab::bench_iterations(
                load_one(iter_load.data.front(), iter_load), iter_k_min, iter_k_max,
                bench_options(iter_load, iter_run));
            write_report(report, iter_out);
            return report.partial ? kExitDegenerate : 0;
        }
    } catch (const kmlab::IoError& e) {
        std::cerr << "kmlab: " << e.what() << "\n";
        return kExitIo;
    } catch (const kmlab::DegeneracyError& e) {
        std::cerr << "kmlab: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const kmlab::Error& e) {
        std::cerr << "kmlab: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
