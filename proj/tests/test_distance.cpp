#include <doctest.h>

#include <cmath>
#include <vector>

#include "kmlab/dataset.hpp"
#include "kmlab/distance.hpp"
#include "kmlab/error.hpp"
#include "kmlab/rng.hpp"

using namespace kmlab;

namespace {

std::vector<double> random_vector(Rng& rng, std::size_t p, double scale = 10.0) {
    std::vector<double> v(p);
    for (auto& x : v) x = (rng.next_double() - 0.5) * scale;
    return v;
}

}  // namespace

TEST_CASE("metric values on the 3-4 pair") {
    const std::vector<double> a{0, 0}, b{3, 4};
    CHECK(distance(Metric::manhattan, a, b) == 7.0);
    CHECK(distance(Metric::euclidean, a, b) == 5.0);
    CHECK(distance(Metric::chebyshev, a, b) == 4.0);
}

TEST_CASE("identical vectors have distance zero") {
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_vector(rng, 1 + rng.next_below(8));
        for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev})
            CHECK(distance(m, x, x) == 0.0);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const std::vector<double> a{1, 2}, b{1, 2, 3};
    CHECK_THROWS_AS(distance(Metric::euclidean, a, b), InvalidArgument);
}

TEST_CASE("metric axioms on random pairs and triples") {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const std::size_t p = 1 + rng.next_below(10);
        const auto x = random_vector(rng, p);
        const auto y = random_vector(rng, p);
        const auto z = random_vector(rng, p);
        for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev}) {
            const double xy = distance(m, x, y);
            REQUIRE(xy >= 0.0);
            REQUIRE(xy == distance(m, y, x));
            REQUIRE(distance(m, x, z) <= xy + distance(m, y, z) + 1e-9);
        }
    }
}

TEST_CASE("metric ordering: chebyshev <= euclidean <= manhattan <= p*chebyshev") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const std::size_t p = 1 + rng.next_below(10);
        const auto x = random_vector(rng, p);
        const auto y = random_vector(rng, p);
        const double inf = distance(Metric::chebyshev, x, y);
        const double two = distance(Metric::euclidean, x, y);
        const double one = distance(Metric::manhattan, x, y);
        REQUIRE(inf <= two + 1e-12);
        REQUIRE(two <= one + 1e-12);
        REQUIRE(one <= static_cast<double>(p) * inf + 1e-9);
    }
}

TEST_CASE("translation invariance") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const std::size_t p = 1 + rng.next_below(6);
        auto x = random_vector(rng, p);
        auto y = random_vector(rng, p);
        const auto t = random_vector(rng, p, 100.0);
        std::vector<double> xt(p), yt(p);
        for (std::size_t j = 0; j < p; ++j) {
            xt[j] = x[j] + t[j];
            yt[j] = y[j] + t[j];
        }
        for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev})
            REQUIRE(distance(m, xt, yt) == doctest::Approx(distance(m, x, y)).epsilon(1e-9));
    }
}

TEST_CASE("pairwise: 1-D example and diagonal") {
    Dataset d;
    d.features = Matrix::from_rows({{0}, {1}, {2}, {10}});
    const DistanceMatrix dm = pairwise(Metric::euclidean, d);
    CHECK(dm.entries(0, 0) == 0.0);
    CHECK(dm.entries(0, 1) == 1.0);
    CHECK(dm.entries(0, 2) == 2.0);
    CHECK(dm.entries(0, 3) == 10.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK(dm.entries(i, i) == 0.0);
}

TEST_CASE("pairwise matches a double-loop oracle") {
    Rng rng(5);
    Dataset d;
    d.features = Matrix(50, 3);
    for (std::size_t r = 0; r < 50; ++r)
        for (std::size_t c = 0; c < 3; ++c) d.features(r, c) = rng.next_double() * 20 - 10;

    for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev}) {
        const DistanceMatrix dm = pairwise(m, d);
        for (std::size_t i = 0; i < 50; ++i) {
            for (std::size_t j = 0; j < 50; ++j) {
                // independent elementwise computation
                double expect = 0.0;
                if (m == Metric::manhattan) {
                    for (std::size_t c = 0; c < 3; ++c)
                        expect += std::abs(d.features(i, c) - d.features(j, c));
                } else if (m == Metric::euclidean) {
                    double sq = 0.0;
                    for (std::size_t c = 0; c < 3; ++c) {
                        const double diff = d.features(i, c) - d.features(j, c);
                        sq += diff * diff;
                    }
                    expect = std::sqrt(sq);
                } else {
                    for (std::size_t c = 0; c < 3; ++c)
                        expect = std::max(expect,
                                          std::abs(d.features(i, c) - d.features(j, c)));
                }
                REQUIRE(dm.entries(i, j) == doctest::Approx(expect).epsilon(1e-12));
                REQUIRE(dm.entries(i, j) == dm.entries(j, i));
            }
        }
    }
}

TEST_CASE("metric name round-trip") {
    for (Metric m : {Metric::manhattan, Metric::euclidean, Metric::chebyshev})
        CHECK(metric_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(metric_from_string("cosine"), InvalidArgument);
}
