#include "reflectfit/reflection.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace reflectfit {

namespace {

std::size_t checked_dim(const PointSet& P, const PointSet& Q) {
    if (P.size() != Q.size()) {
        throw InvalidInput("point count mismatch: " + std::to_string(P.size()) +
                           " vs " + std::to_string(Q.size()));
    }
    if (P.empty()) throw InvalidInput("point sets must contain at least one point");
    const std::size_t dim = P.front().size();
    for (const auto& p : P) {
        if (p.size() != dim) throw InvalidInput("inconsistent point dimension in first set");
    }
    for (const auto& q : Q) {
        if (q.size() != dim) throw InvalidInput("inconsistent point dimension in second set");
    }
    return dim;
}

}  // namespace

Vector reflect_point(const Hyperplane& plane, const Vector& p) {
    if (p.size() != plane.normal.size()) {
        throw InvalidInput("reflect_point: point dimension " + std::to_string(p.size()) +
                           " does not match plane dimension " +
                           std::to_string(plane.normal.size()));
    }
    const double signed_dist = dot(p, plane.normal) - plane.offset;
    return sub(p, scaled(plane.normal, 2.0 * signed_dist));
}

double objective(const Hyperplane& plane, const PointSet& P, const PointSet& Q) {
    const std::size_t dim = checked_dim(P, Q);
    if (plane.normal.size() != dim) {
        throw InvalidInput("objective: plane dimension does not match point sets");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < P.size(); ++i) {
        sum += norm_squared(sub(reflect_point(plane, P[i]), Q[i]));
    }
    return sum;
}

Vector combined_centroid(const PointSet& P, const PointSet& Q) {
    const std::size_t dim = checked_dim(P, Q);
    Vector sum_p(dim, 0.0);
    Vector sum_q(dim, 0.0);
    for (const auto& p : P) sum_p = add(sum_p, p);
    for (const auto& q : Q) sum_q = add(sum_q, q);
    return scaled(add(sum_p, sum_q), 1.0 / (2.0 * static_cast<double>(P.size())));
}

CenteredPairs center_pairs(const PointSet& P, const PointSet& Q) {
    CenteredPairs cp;
    cp.centroid = combined_centroid(P, Q);
    cp.xs.reserve(P.size());
    cp.ys.reserve(Q.size());
    for (const auto& p : P) cp.xs.push_back(sub(p, cp.centroid));
    for (const auto& q : Q) cp.ys.push_back(sub(q, cp.centroid));
    return cp;
}

CovariancePair covariance_matrices(const CenteredPairs& cp) {
    const std::size_t dim = cp.centroid.size();
    Matrix cross(dim);
    for (std::size_t k = 0; k < cp.xs.size(); ++k) {
        const Vector& x = cp.xs[k];
        const Vector& y = cp.ys[k];
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) cross(i, j) += x[i] * y[j];
        }
    }
    SymMatrix sym = symmetrize(cross);
    return CovariancePair{std::move(cross), std::move(sym)};
}

Hyperplane canonicalize(Hyperplane plane) {
    for (double component : plane.normal) {
        if (std::abs(component) > kSignTol) {
            if (component < 0.0) {
                plane.normal = negated(plane.normal);
                plane.offset = -plane.offset;
            }
            return plane;
        }
    }
    throw InvalidInput("canonicalize: normal is (numerically) zero");
}

FitResult fit_reflection(const PointSet& P, const PointSet& Q) {
    const std::size_t dim = checked_dim(P, Q);
    if (dim < 2) throw InvalidInput("fit_reflection: points must have dimension >= 2");
    for (const auto& p : P) {
        if (!all_finite(p)) throw InvalidInput("fit_reflection: non-finite coordinate in first set");
    }
    for (const auto& q : Q) {
        if (!all_finite(q)) throw InvalidInput("fit_reflection: non-finite coordinate in second set");
    }

    const CenteredPairs cp = center_pairs(P, Q);
    const CovariancePair cov = covariance_matrices(cp);

    if (cov.sym.max_abs() == 0.0) {
        throw DegenerateInput(
            "fit_reflection: pair covariance is identically zero, every hyperplane "
            "is an equally good fit");
    }

    const EigenDecomposition eig = jacobi_eigen(cov.sym);

    // Sign first, offset second, so (normal, offset) stay consistent.
    Hyperplane plane = canonicalize(Hyperplane{eig.eigenvectors.front(), 0.0});
    plane.offset = dot(cp.centroid, plane.normal);

    FitResult result;
    result.objective = objective(plane, P, Q);
    result.plane = std::move(plane);
    result.eigenvalues = eig.eigenvalues;
    const double gap = eig.eigenvalues[1] - eig.eigenvalues[0];
    result.degenerate =
        gap <= kDegenerateGapTol * std::max(1.0, std::abs(eig.eigenvalues.back()));
    result.centroid = cp.centroid;
    return result;
}

}  // namespace reflectfit
