#pragma once

// Brute-force reference solver: samples unit normals densely (half-circle in
// 2D, Fibonacci points on the upper hemisphere in 3D), pairs each with its
// closed-form optimal offset, and keeps the lowest-objective candidate.
// Exists to validate fit_reflection, not to be fast.

#include <cstddef>

#include "reflectfit/reflection.hpp"

namespace reflectfit {

struct OracleResult {
    Hyperplane plane;       // canonicalized
    double objective = 0.0;
    std::size_t samples = 0;
};

/// Evaluates `resolution` candidate normals (D must be 2 or 3, resolution
/// >= 8) with offset = centroid . normal each, and returns the argmin; ties
/// go to the lowest sample index.
OracleResult grid_search_fit(const PointSet& P, const PointSet& Q, std::size_t resolution);

}  // namespace reflectfit
