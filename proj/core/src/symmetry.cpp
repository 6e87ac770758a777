#include "reflectfit/symmetry.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace reflectfit {

PrincipalAxes principal_axes(const PointSet& S) {
    if (S.empty()) throw InvalidInput("principal_axes: empty point set");
    const std::size_t dim = S.front().size();
    for (const auto& s : S) {
        if (s.size() != dim) throw InvalidInput("principal_axes: inconsistent point dimension");
    }

    Vector centroid(dim, 0.0);
    for (const auto& s : S) centroid = add(centroid, s);
    centroid = scaled(centroid, 1.0 / static_cast<double>(S.size()));

    Matrix scatter(dim);
    for (const auto& s : S) {
        const Vector x = sub(s, centroid);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) scatter(i, j) += x[i] * x[j];
        }
    }

    const EigenDecomposition eig = jacobi_eigen(symmetrize(scatter));

    PrincipalAxes axes;
    axes.centroid = std::move(centroid);
    axes.axes.reserve(dim);
    axes.variances.reserve(dim);
    for (std::size_t k = dim; k-- > 0;) {  // descending variance
        axes.axes.push_back(eig.eigenvectors[k]);
        axes.variances.push_back(eig.eigenvalues[k]);
    }
    return axes;
}

namespace {

Hyperplane initial_plane(const PointSet& S, const SymmetryConfig& cfg) {
    if (cfg.init == SymmetryConfig::Init::GivenPlane) {
        const Hyperplane& plane = cfg.init_plane;
        if (plane.normal.size() != S.front().size()) {
            throw InvalidInput("detect_symmetry: init plane dimension does not match points");
        }
        if (std::abs(norm(plane.normal) - 1.0) > 1e-9) {
            throw InvalidInput("detect_symmetry: init plane normal must be unit length");
        }
        return plane;
    }
    const PrincipalAxes axes = principal_axes(S);
    if (cfg.pca_axis < 0 || static_cast<std::size_t>(cfg.pca_axis) >= axes.axes.size()) {
        throw InvalidInput("detect_symmetry: pca_axis out of range");
    }
    const Vector& normal = axes.axes[static_cast<std::size_t>(cfg.pca_axis)];
    return Hyperplane{normal, dot(axes.centroid, normal)};
}

// Index of the point in S nearest to r; ties go to the lowest index.
std::size_t nearest_index(const PointSet& S, const Vector& r) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < S.size(); ++j) {
        const double d = norm_squared(sub(S[j], r));
        if (d < best_dist) {
            best_dist = d;
            best = j;
        }
    }
    return best;
}

}  // namespace

SymmetryResult detect_symmetry(const PointSet& S, const SymmetryConfig& cfg) {
    if (cfg.max_iterations < 1) throw InvalidInput("detect_symmetry: max_iterations must be >= 1");
    if (!(cfg.convergence_tol > 0.0)) {
        throw InvalidInput("detect_symmetry: convergence_tol must be positive");
    }
    if (S.size() < 2) throw InvalidInput("detect_symmetry: need at least 2 points");
    const std::size_t dim = S.front().size();
    if (dim != 2 && dim != 3) {
        throw InvalidInput("detect_symmetry: only dimensions 2 and 3 are supported");
    }

    Hyperplane plane = initial_plane(S, cfg);

    double scale_sq = 0.0;
    for (const auto& s : S) {
        for (const double x : s) scale_sq = std::max(scale_sq, x * x);
    }
    const double floor = kObjectiveFloorTol * std::max(1.0, scale_sq);

    SymmetryResult result;
    PointSet matched(S.size());
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        // Correspondence: each point's reflection gets its nearest neighbor
        // in S (many-to-one allowed).
        for (std::size_t i = 0; i < S.size(); ++i) {
            matched[i] = S[nearest_index(S, reflect_point(plane, S[i]))];
        }

        // The current plane's objective under the fresh matching bounds the
        // refit from above, so the history is non-increasing.
        const double current = objective(plane, S, matched);
        const FitResult fit = fit_reflection(S, matched);

        plane = fit.plane;
        result.objective_history.push_back(fit.objective);
        result.iterations = iter + 1;
        if (current - fit.objective <= cfg.convergence_tol * current + floor) {
            result.converged = true;
            break;
        }
    }

    result.plane = std::move(plane);
    return result;
}

}  // namespace reflectfit
