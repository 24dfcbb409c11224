#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kmlab/dataset.hpp"
#include "kmlab/error.hpp"
#include "kmlab/init.hpp"
#include "kmlab/rng.hpp"

using namespace kmlab;

namespace {

Dataset line_dataset() {
    Dataset d;
    d.features = Matrix::from_rows({{0}, {1}, {2}, {10}});
    return d;
}

}  // namespace

TEST_CASE("random_init: k=n is a permutation of the objects") {
    const Dataset d = make_blobs(2, 5, 2, 4.0, 0.5, 1);
    const Matrix c = random_init(d, d.n(), 42);
    REQUIRE(c.rows() == d.n());
    std::vector<std::vector<double>> rows, expected;
    for (std::size_t i = 0; i < d.n(); ++i) {
        rows.push_back({c(i, 0), c(i, 1)});
        expected.push_back({d.features(i, 0), d.features(i, 1)});
    }
    std::sort(rows.begin(), rows.end());
    std::sort(expected.begin(), expected.end());
    CHECK(rows == expected);
}

TEST_CASE("random_init: k=1 picks a dataset row") {
    const Dataset d = make_blobs(2, 5, 2, 4.0, 0.5, 2);
    const Matrix c = random_init(d, 1, 7);
    bool found = false;
    for (std::size_t i = 0; i < d.n() && !found; ++i)
        found = c(0, 0) == d.features(i, 0) && c(0, 1) == d.features(i, 1);
    CHECK(found);
}

TEST_CASE("random_init: deterministic per seed, distinct rows") {
    const Dataset d = make_blobs(3, 10, 2, 5.0, 0.3, 3);
    CHECK(random_init(d, 5, 9) == random_init(d, 5, 9));
    CHECK(random_init(d, 5, 9) != random_init(d, 5, 10));

    // sampled without replacement: all selected rows distinct
    const Matrix c = random_init(d, 30, 4);
    std::set<std::pair<double, double>> unique;
    for (std::size_t i = 0; i < 30; ++i) unique.insert({c(i, 0), c(i, 1)});
    CHECK(unique.size() == 30);
}

TEST_CASE("random_init: k > n rejected") {
    const Dataset d = line_dataset();
    CHECK_THROWS_AS(random_init(d, 5, 1), DegeneracyError);
}

TEST_CASE("renovated_init: frozen 1-D oracle") {
    // 4x4 distance matrix of (0,1,2,10), column sums (13,11,11,27), column
    // entries squared and summed:
    //   (1+4+100)/169, (1+1+81)/121, (4+1+64)/121, (100+81+64)/729
    const Dataset d = line_dataset();
    const RenovatedInit init = renovated_init(d, 2, Metric::euclidean);

    REQUIRE(init.score.scores.size() == 4);
    CHECK(init.score.scores[0] == doctest::Approx(105.0 / 169.0).epsilon(1e-12));
    CHECK(init.score.scores[1] == doctest::Approx(83.0 / 121.0).epsilon(1e-12));
    CHECK(init.score.scores[2] == doctest::Approx(69.0 / 121.0).epsilon(1e-12));
    CHECK(init.score.scores[3] == doctest::Approx(245.0 / 729.0).epsilon(1e-12));

    // smallest two scores belong to x=10 and x=2
    CHECK(init.selected == std::vector<std::size_t>{3, 2});
    CHECK(init.centroids(0, 0) == 10.0);
    CHECK(init.centroids(1, 0) == 2.0);
}

TEST_CASE("renovated_init: normalized matrix columns sum to 1") {
    const Dataset d = make_blobs(3, 15, 3, 6.0, 0.8, 11);
    const RenovatedInit init = renovated_init(d, 3);
    for (std::size_t j = 0; j < d.n(); ++j) {
        double sum = 0.0;
        double score = 0.0;
        for (std::size_t i = 0; i < d.n(); ++i) {
            sum += init.score.normalized(i, j);
            score += init.score.normalized(i, j) * init.score.normalized(i, j);
        }
        REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(score == doctest::Approx(init.score.scores[j]).epsilon(1e-12));
    }
}

TEST_CASE("renovated_init: k=n selects everything") {
    const Dataset d = line_dataset();
    const RenovatedInit init = renovated_init(d, 4);
    std::set<std::size_t> selected(init.selected.begin(), init.selected.end());
    CHECK(selected == std::set<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("renovated_init: duplicate rows tie-break to the lower index") {
    Dataset d;
    d.features = Matrix::from_rows({{0, 0}, {0, 0}, {5, 5}, {0, 0}});
    // rows 0, 1, 3 are identical, hence identical scores
    const RenovatedInit init = renovated_init(d, 2);
    CHECK(init.score.scores[0] == init.score.scores[1]);
    CHECK(init.score.scores[0] == init.score.scores[3]);
    const bool has_0_before_1 =
        std::find(init.selected.begin(), init.selected.end(), 1) == init.selected.end() ||
        std::find(init.selected.begin(), init.selected.end(), 0) <
            std::find(init.selected.begin(), init.selected.end(), 1);
    CHECK(has_0_before_1);
}

TEST_CASE("renovated_init: selected scores are the k smallest (sort oracle)") {
    const Dataset d = make_blobs(4, 12, 2, 5.0, 1.0, 13);
    const std::size_t k = 5;
    const RenovatedInit init = renovated_init(d, k);
    std::vector<double> sorted = init.score.scores;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> selected_scores;
    for (std::size_t idx : init.selected) selected_scores.push_back(init.score.scores[idx]);
    std::sort(selected_scores.begin(), selected_scores.end());
    for (std::size_t i = 0; i < k; ++i) CHECK(selected_scores[i] == sorted[i]);
}

TEST_CASE("renovated_init: idempotent and seed-free") {
    const Dataset d = make_blobs(3, 20, 3, 7.0, 0.5, 17);
    const RenovatedInit a = renovated_init(d, 3);
    const RenovatedInit b = renovated_init(d, 3);
    CHECK(a.centroids == b.centroids);
    CHECK(a.selected == b.selected);
    CHECK(a.score.scores == b.score.scores);
}

TEST_CASE("renovated_init: scale invariance of the selection") {
    const Dataset d = make_blobs(3, 15, 2, 6.0, 1.2, 19);
    for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev}) {
        const RenovatedInit base = renovated_init(d, 4, m);
        Dataset scaled = d;
        for (std::size_t r = 0; r < d.n(); ++r)
            for (std::size_t c = 0; c < d.p(); ++c) scaled.features(r, c) *= 37.5;
        const RenovatedInit after = renovated_init(scaled, 4, m);
        CHECK(base.selected == after.selected);
    }
}

TEST_CASE("renovated_init: degenerate inputs") {
    SUBCASE("k > n") {
        CHECK_THROWS_AS(renovated_init(line_dataset(), 5), DegeneracyError);
    }
    SUBCASE("single object") {
        Dataset d;
        d.features = Matrix::from_rows({{1, 2}});
        CHECK_THROWS_AS(renovated_init(d, 1), DegeneracyError);
    }
    SUBCASE("all objects identical") {
        Dataset d;
        d.features = Matrix::from_rows({{3, 3}, {3, 3}, {3, 3}});
        CHECK_THROWS_AS(renovated_init(d, 2), DegeneracyError);
    }
}
