#include "reflectfit/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace reflectfit {

namespace {

// Sign symmetry (n, d) ~ (-n, -d) lets us cover only half the directions.
Vector sample_normal(std::size_t dim, std::size_t k, std::size_t resolution) {
    if (dim == 2) {
        // Half circle: theta_k = k * pi / resolution.
        const double theta =
            static_cast<double>(k) * std::numbers::pi / static_cast<double>(resolution);
        return Vector{std::cos(theta), std::sin(theta)};
    }
    // Fibonacci spiral on the upper hemisphere.
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double z = (static_cast<double>(k) + 0.5) / static_cast<double>(resolution);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * static_cast<double>(k);
    return Vector{r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

OracleResult grid_search_fit(const PointSet& P, const PointSet& Q, std::size_t resolution) {
    if (P.empty() || P.size() != Q.size()) {
        throw InvalidInput("grid_search_fit: point count mismatch or empty input");
    }
    const std::size_t dim = P.front().size();
    if (dim != 2 && dim != 3) {
        throw InvalidInput("grid_search_fit: only dimensions 2 and 3 are supported, got " +
                           std::to_string(dim));
    }
    if (resolution < 8) {
        throw InvalidInput("grid_search_fit: resolution must be at least 8");
    }

    const Vector centroid = combined_centroid(P, Q);

    double best_objective = std::numeric_limits<double>::infinity();
    Hyperplane best;
    for (std::size_t k = 0; k < resolution; ++k) {
        Hyperplane candidate;
        candidate.normal = sample_normal(dim, k, resolution);
        candidate.offset = dot(centroid, candidate.normal);
        const double value = objective(candidate, P, Q);
        if (value < best_objective) {
            best_objective = value;
            best = candidate;
        }
    }

    return OracleResult{canonicalize(best), best_objective, resolution};
}

}  // namespace reflectfit
