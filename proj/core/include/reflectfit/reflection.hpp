#pragma once

// Least-squares affine reflection between two corresponding point sets.
//
// Given P = {p_1..p_m} and Q = {q_1..q_m} in R^D, fit_reflection finds the
// hyperplane (unit normal, offset) whose reflection maps P onto Q with the
// smallest sum of squared residuals:
//
//   1. c  = mean of all 2m points           (the optimal plane contains c)
//   2. x_i = p_i - c,  y_i = q_i - c
//   3. B  = sum_i x_i y_i^T,  A = (B + B^T)/2
//   4. normal = eigenvector of A's smallest eigenvalue
//   5. offset = c . normal

#include <vector>

#include "reflectfit/linalg.hpp"

namespace reflectfit {

/// Ordered list of m points sharing one dimension D.
using PointSet = std::vector<Vector>;

/// The hyperplane { p : normal . p == offset } with unit normal.
struct Hyperplane {
    Vector normal;
    double offset = 0.0;
};

/// Centroid of both sets plus the centered vectors; sum(xs) + sum(ys) == 0.
struct CenteredPairs {
    Vector centroid;
    std::vector<Vector> xs;
    std::vector<Vector> ys;
};

/// Cross-covariance of the centered pairs and its symmetric part.
struct CovariancePair {
    Matrix cross;
    SymMatrix sym;
};

struct FitResult {
    Hyperplane plane;
    std::vector<double> eigenvalues;  // full spectrum, ascending
    double objective = 0.0;
    bool degenerate = false;          // smallest eigenvalue (numerically) repeated
    Vector centroid;
};

/// Canonical sign rule threshold: the first normal component with absolute
/// value above this decides the sign.
inline constexpr double kSignTol = 1e-9;

/// Relative eigen-gap below which the fitted normal is flagged non-unique.
inline constexpr double kDegenerateGapTol = 1e-9;

/// p mirrored across the plane: p - 2 (p . n - d) n.
Vector reflect_point(const Hyperplane& plane, const Vector& p);

/// Sum over i of || reflect(p_i) - q_i ||^2.
double objective(const Hyperplane& plane, const PointSet& P, const PointSet& Q);

/// Arithmetic mean of all 2m points of both sets.
Vector combined_centroid(const PointSet& P, const PointSet& Q);

CenteredPairs center_pairs(const PointSet& P, const PointSet& Q);

CovariancePair covariance_matrices(const CenteredPairs& cp);

/// Resolves the (n, d) vs (-n, -d) ambiguity: flips both so that the first
/// normal component with |value| > kSignTol is positive. The reflection map
/// is unchanged. Throws on a zero normal.
Hyperplane canonicalize(Hyperplane plane);

/// Best-fit reflection taking P onto Q. Throws InvalidInput on mismatched or
/// non-finite input, DegenerateInput when the pair covariance is identically
/// zero, and propagates ConvergenceError from the eigen solver.
FitResult fit_reflection(const PointSet& P, const PointSet& Q);

}  // namespace reflectfit
