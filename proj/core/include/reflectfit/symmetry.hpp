#pragma once

// Approximate bilateral-symmetry detection for a single point set: alternate
// nearest-neighbor correspondence against the reflected set with a reflection
// refit. The refinement is local; callers wanting the global symmetry run it
// from several initial planes (the CLI tries every principal axis).

#include <vector>

#include "reflectfit/reflection.hpp"

namespace reflectfit {

/// Absolute convergence slack as a fraction of max(1, scale^2): objective
/// improvements this small are rounding noise (squared residuals bottom out
/// near eps^2 * scale^2), so the loop treats them as a fixed point. Keeps
/// exactly-symmetric input converging on the spot instead of chasing dust.
inline constexpr double kObjectiveFloorTol = 1e-24;

struct SymmetryConfig {
    int max_iterations = 50;
    double convergence_tol = 1e-10;  // on relative objective decrease

    enum class Init { PcaAxis, GivenPlane };
    Init init = Init::PcaAxis;
    int pca_axis = 0;       // 0 = direction of largest variance
    Hyperplane init_plane;  // used when init == GivenPlane

    static SymmetryConfig pca_axis_init(int axis) {
        SymmetryConfig cfg;
        cfg.init = Init::PcaAxis;
        cfg.pca_axis = axis;
        return cfg;
    }
    static SymmetryConfig plane_init(Hyperplane plane) {
        SymmetryConfig cfg;
        cfg.init = Init::GivenPlane;
        cfg.init_plane = std::move(plane);
        return cfg;
    }
};

struct SymmetryResult {
    Hyperplane plane;
    std::vector<double> objective_history;  // per-iteration fit objectives, non-increasing
    int iterations = 0;
    bool converged = false;
};

/// Principal directions of a point set's own scatter, variance-descending.
struct PrincipalAxes {
    Vector centroid;
    std::vector<Vector> axes;
    std::vector<double> variances;
};

PrincipalAxes principal_axes(const PointSet& S);

/// Requires m >= 2 and D in {2, 3}. Propagates DegenerateInput from the
/// inner reflection fit (e.g. all points coincident with the centroid).
SymmetryResult detect_symmetry(const PointSet& S, const SymmetryConfig& cfg = {});

}  // namespace reflectfit
