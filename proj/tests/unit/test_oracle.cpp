#include <cmath>
#include <numbers>

#include "doctest.h"
#include "reflectfit/oracle.hpp"
#include "support/generators.hpp"

using namespace reflectfit;
using testsupport::Rng;

namespace {

const PointSet kWorkedP = {{1.0, 0.0}, {2.0, 0.0}, {0.0, 1.0}};
const PointSet kWorkedQ = {{1.0, 0.0}, {2.0, 0.0}, {0.0, -1.0}};

// Independent evaluation of one half-circle sample, mirroring the sampling
// contract: theta_k = k pi / resolution, offset via the combined centroid.
double sample_objective_2d(const PointSet& P, const PointSet& Q, std::size_t k,
                           std::size_t resolution) {
    const double theta =
        static_cast<double>(k) * std::numbers::pi / static_cast<double>(resolution);
    Hyperplane plane{{std::cos(theta), std::sin(theta)}, 0.0};
    plane.offset = dot(combined_centroid(P, Q), plane.normal);
    return objective(plane, P, Q);
}

}  // namespace

TEST_CASE("grid_search_fit recovers the worked instance within one grid step") {
    OracleResult oracle = grid_search_fit(kWorkedP, kWorkedQ, 360);
    CHECK(oracle.samples == 360);

    // The true normal (0, 1) sits at theta = pi/2, which the 360-sample grid
    // hits at k = 180; the returned minimum is at most the value there and
    // lies within one grid step of the truth.
    const double at_nearest = sample_objective_2d(kWorkedP, kWorkedQ, 180, 360);
    CHECK(oracle.objective <= at_nearest + 1e-15);
    CHECK(testsupport::angle_between_lines(oracle.plane.normal, {0.0, 1.0}) <=
          std::numbers::pi / 360.0 + 1e-12);
    CHECK(std::abs(oracle.plane.offset) <= 1e-12);
}

TEST_CASE("grid_search_fit of an asymmetric set against itself stays positive") {
    const PointSet s = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, -1.0}};
    OracleResult oracle = grid_search_fit(s, s, 512);
    CHECK(oracle.objective > 0.0);
}

TEST_CASE("grid_search_fit ties go to the first sample") {
    // A single coincident pair scores zero for every normal; sample 0 of the
    // half circle is (1, 0).
    OracleResult oracle = grid_search_fit({{0.0, 0.0}}, {{0.0, 0.0}}, 16);
    CHECK(oracle.objective == 0.0);
    CHECK(oracle.plane.normal[0] == 1.0);
    CHECK(oracle.plane.offset == 0.0);
}

TEST_CASE("doubling the 2d resolution never increases the oracle objective") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> counts(3, 30);
        const Hyperplane truth = testsupport::random_plane(rng, 2);
        const PointSet P = testsupport::random_points(rng, counts(rng), 2);
        const PointSet Q =
            testsupport::add_noise(rng, testsupport::reflect_all(truth, P), 0.05);

        double previous = grid_search_fit(P, Q, 8).objective;
        for (std::size_t resolution = 16; resolution <= 128; resolution *= 2) {
            const double current = grid_search_fit(P, Q, resolution).objective;
            CHECK(current <= previous + 1e-15);
            previous = current;
        }
    }
}

TEST_CASE("oracle gap above the eigen fit shrinks as the grid refines") {
    Rng rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<std::size_t> counts(5, 40);
        const Hyperplane truth = testsupport::random_plane(rng, 2);
        const PointSet P = testsupport::random_points(rng, counts(rng), 2);
        const PointSet Q =
            testsupport::add_noise(rng, testsupport::reflect_all(truth, P), 0.1);

        const double fitted = fit_reflection(P, Q).objective;
        double previous_gap = std::numeric_limits<double>::infinity();
        for (std::size_t resolution : {64u, 256u, 1024u, 4096u}) {
            const double gap = grid_search_fit(P, Q, resolution).objective - fitted;
            CHECK(gap >= -1e-9);  // the eigen fit is the continuous minimizer
            CHECK(gap <= previous_gap + 1e-15);
            previous_gap = gap;
        }
    }
}

TEST_CASE("grid_search_fit on the 3d hemisphere") {
    Rng rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_int_distribution<std::size_t> counts(5, 25);
        const Hyperplane truth = testsupport::random_plane(rng, 3);
        const PointSet P = testsupport::random_points(rng, counts(rng), 3);
        const PointSet Q = testsupport::reflect_all(truth, P);

        OracleResult oracle = grid_search_fit(P, Q, 5000);
        const double fitted = fit_reflection(P, Q).objective;
        CHECK(fitted <= oracle.objective + 1e-9);
        // ~5000 near-uniform hemisphere samples put one within a few
        // hundredths of a radian of the true normal.
        CHECK(testsupport::angle_between_lines(oracle.plane.normal, truth.normal) <= 0.05);
        CHECK(std::abs(norm(oracle.plane.normal) - 1.0) <= 1e-12);
    }
}

TEST_CASE("grid_search_fit input validation") {
    const PointSet p2 = {{1.0, 2.0}};
    CHECK_THROWS_AS(grid_search_fit(p2, p2, 7), InvalidInput);
    CHECK_THROWS_AS(grid_search_fit(p2, {}, 64), InvalidInput);
    const PointSet p4 = {{1.0, 2.0, 3.0, 4.0}};
    CHECK_THROWS_AS(grid_search_fit(p4, p4, 64), InvalidInput);
}
