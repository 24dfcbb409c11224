#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = KMLAB_CLI_PATH;
const fs::path kData = KMLAB_DATA_DIR;

struct CommandResult {
    int exit_code = -1;
    std::string stdout_text;
};

CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = fs::temp_directory_path() /
                         ("kmlab_cli_" + std::to_string(getpid()) + "_" +
                          std::to_string(counter++) + ".out");
    const std::string cmd = kCli + " " + args + " > " + out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    result.stdout_text = text.str();
    fs::remove(out);
    return result;
}

std::size_t data_rows(const fs::path& file) {
    std::ifstream in(file);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) ++n;
    return n;
}

nlohmann::json strip_volatile(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    j.erase("elapsed_ms");
    j.erase("seed");  // input echo; the computation ignores it for renovated
    return j;
}

}  // namespace

TEST_CASE("cluster: end-to-end on the iris file") {
    const auto r = run_cli("cluster --data " + (kData / "iris.data").string() +
                           " --preset iris --algo renovated --k 3 --metric euclidean");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["schema"] == 1);
    CHECK(j["assignments"].size() == data_rows(kData / "iris.data"));
    CHECK(j["centroids"].size() == 3);
    CHECK(j["db_index"].is_number());
    CHECK(j["converged"].is_boolean());
}

TEST_CASE("cluster: renovated output is byte-identical across seeds") {
    const std::string base = "cluster --data " + (kData / "iris.data").string() +
                             " --preset iris --algo renovated --k 3";
    const auto a = run_cli(base + " --seed 1");
    const auto b = run_cli(base + " --seed 2");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_volatile(a.stdout_text).dump() == strip_volatile(b.stdout_text).dump());
}

TEST_CASE("cluster: exit codes distinguish failure classes") {
    SUBCASE("k = 0 is a usage error") {
        const auto r = run_cli("cluster --data " + (kData / "iris.data").string() +
                               " --preset iris --algo kmeans --k 0");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("unknown algorithm is a usage error") {
        const auto r = run_cli("cluster --data " + (kData / "iris.data").string() +
                               " --preset iris --algo dbscan --k 3");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("missing file is an I/O error") {
        const auto r = run_cli("cluster --data /nonexistent.data --algo kmeans --k 3");
        CHECK(r.exit_code == 3);
    }
    SUBCASE("k > n is a degeneracy error") {
        const auto r = run_cli("cluster --data " + (kData / "iris.data").string() +
                               " --preset iris --algo kmeans --k 151");
        CHECK(r.exit_code == 4);
    }
    SUBCASE("missing subcommand is a usage error") {
        CHECK(run_cli("").exit_code == 2);
    }
}

TEST_CASE("cluster: --out writes the report to a file") {
    const fs::path out = fs::temp_directory_path() /
                         ("kmlab_cli_out_" + std::to_string(getpid()) + ".json");
    const auto r = run_cli("cluster --data " + (kData / "iris.data").string() +
                           " --preset iris --algo kmeans --k 3 --seed 5 --out " +
                           out.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    CHECK(j["k"] == 3);
    CHECK(j["seed"] == 5);
    fs::remove(out);
}

TEST_CASE("bench distance-sweep: json report on stdout") {
    const auto r = run_cli("bench distance-sweep --data " + (kData / "iris.data").string() +
                           " --preset iris --k-min 2 --k-max 3 --seeds 2");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "distance-sweep");
    CHECK(j["records"].size() == 3 * 2 * 2);
    CHECK(j["aggregates"].size() == 3 * 2);
}

TEST_CASE("bench algorithms: preset inferred from the file stem") {
    const auto r = run_cli("bench algorithms --data " + (kData / "iris.data").string() +
                           " --data " + (kData / "wine.data").string() +
                           " --k 3 --seeds 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("iris,") != std::string::npos);
    CHECK(r.stdout_text.find("wine,") != std::string::npos);
    CHECK(r.stdout_text.find("renovated") != std::string::npos);
}

TEST_CASE("bench time and iterations run on a custom whitespace file") {
    const auto time_run =
        run_cli("bench time --data " + (kData / "ecoli.data").string() +
                " --k-list 2,3 --seeds 2");
    REQUIRE(time_run.exit_code == 0);
    const nlohmann::json tj = nlohmann::json::parse(time_run.stdout_text);
    CHECK(tj["records"].size() == 4 * 2 * 2);

    const auto iter_run =
        run_cli("bench iterations --data " + (kData / "ecoli.data").string() +
                " --k-min 2 --k-max 3 --seeds 2");
    REQUIRE(iter_run.exit_code == 0);
    const nlohmann::json ij = nlohmann::json::parse(iter_run.stdout_text);
    CHECK(ij["aggregates"].size() == 4 * 2);
}

TEST_CASE("cluster: explicit custom layout flags") {
    const auto r = run_cli("cluster --data " + (kData / "ecoli.data").string() +
                           " --preset custom --delimiter ws --label-col -1 --drop-cols 0" +
                           " --algo kmeans --k 3 --seed 4");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    CHECK(j["dataset"]["p"] == 7);
    CHECK(j["assignments"].size() == data_rows(kData / "ecoli.data"));
}

TEST_CASE("bench: normalize flag is recorded") {
    const auto r = run_cli("bench distance-sweep --data " + (kData / "iris.data").string() +
                           " --k-min 2 --k-max 2 --seeds 1 --normalize minmax");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.stdout_text);
    for (const auto& rec : j["records"]) CHECK(rec["normalize"] == "minmax");
}
