#include "commands.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "io.hpp"
#include "json.hpp"
#include "reflectfit/reflection.hpp"
#include "reflectfit/symmetry.hpp"

namespace reflectfit::cli {

void cmd_fit(const std::string& p_path, const std::string& q_path, std::ostream& out) {
    const PointSet P = read_points_csv(p_path);
    const PointSet Q = read_points_csv(q_path);
    if (P.size() != Q.size())
        throw InvalidInput("point count mismatch: " + p_path + " has " +
                           std::to_string(P.size()) + " rows, " + q_path + " has " +
                           std::to_string(Q.size()));

    const FitResult fit = fit_reflection(P, Q);
    PlaneRecord record;
    record.dim = fit.plane.normal.size();
    record.normal = fit.plane.normal;
    record.offset = fit.plane.offset;
    record.eigenvalues = fit.eigenvalues;
    record.objective = fit.objective;
    record.degenerate = fit.degenerate;
    out << plane_record_to_json(record) << '\n';
}

void cmd_apply(const std::string& plane_path, const std::string& p_path, std::ostream& out) {
    const PlaneRecord record = read_plane_json(plane_path);
    const PointSet P = read_points_csv(p_path);
    if (P.front().size() != record.dim)
        throw InvalidInput("dimension mismatch: " + plane_path + " has dim " +
                           std::to_string(record.dim) + ", " + p_path + " has dim " +
                           std::to_string(P.front().size()));

    const Hyperplane plane{record.normal, record.offset};
    for (const Vector& p : P) out << format_row(reflect_point(plane, p)) << '\n';
}

void cmd_gen(const GenOptions& opts) {
    if (opts.dim < 2) throw InvalidInput("gen: --dim must be >= 2");
    if (opts.m < 1) throw InvalidInput("gen: --m must be >= 1");
    if (!(opts.sigma >= 0.0)) throw InvalidInput("gen: --sigma must be >= 0");
    if (opts.out_prefix.empty()) throw InvalidInput("gen: --out-prefix must be non-empty");

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> offset_dist(-0.5, 0.5);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);

    Vector direction(opts.dim);
    do {
        for (double& c : direction) c = gauss(rng);
    } while (norm(direction) < 1e-6);
    Hyperplane plane{normalized(direction), offset_dist(rng)};
    plane = canonicalize(plane);

    PointSet P(opts.m, Vector(opts.dim));
    for (Vector& p : P)
        for (double& c : p) c = coord(rng);

    PointSet Q;
    Q.reserve(opts.m);
    for (const Vector& p : P) {
        Vector q = reflect_point(plane, p);
        if (opts.sigma > 0.0)
            for (double& c : q) c += opts.sigma * gauss(rng);
        Q.push_back(std::move(q));
    }

    write_points_csv(opts.out_prefix + "p.csv", P);
    write_points_csv(opts.out_prefix + "q.csv", Q);

    PlaneRecord record;
    record.dim = opts.dim;
    record.normal = plane.normal;
    record.offset = plane.offset;
    record.seed = opts.seed;
    write_plane_json(opts.out_prefix + "plane.json", record);
}

void cmd_symmetry(const std::string& p_path, const SymmetryOptions& opts, std::ostream& out) {
    const PointSet S = read_points_csv(p_path);

    // Axes with (relatively) zero variance span directions the cloud does not
    // occupy; a plane through such an axis contains every point and would win
    // trivially with objective 0, so only spread-out axes seed the search.
    const PrincipalAxes axes = principal_axes(S);
    const double total_variance =
        std::accumulate(axes.variances.begin(), axes.variances.end(), 0.0);
    std::vector<int> init_axes;
    for (std::size_t k = 0; k < axes.variances.size(); ++k)
        if (axes.variances[k] > 1e-12 * total_variance) init_axes.push_back(static_cast<int>(k));
    if (init_axes.empty()) init_axes.push_back(0);

    SymmetryResult best;
    int best_axis = -1;
    double best_objective = std::numeric_limits<double>::infinity();
    for (const int axis : init_axes) {
        SymmetryConfig cfg = SymmetryConfig::pca_axis_init(axis);
        cfg.max_iterations = opts.max_iterations;
        cfg.convergence_tol = opts.tol;
        SymmetryResult result = detect_symmetry(S, cfg);
        if (result.objective_history.back() < best_objective) {
            best_objective = result.objective_history.back();
            best = std::move(result);
            best_axis = axis;
        }
    }

    nlohmann::ordered_json doc;
    doc["dim"] = S.front().size();
    doc["normal"] = best.plane.normal;
    doc["offset"] = best.plane.offset;
    doc["objective"] = best_objective;
    doc["converged"] = best.converged;
    doc["iterations"] = best.iterations;
    doc["objective_history"] = best.objective_history;
    doc["init_axis"] = best_axis;
    out << doc.dump(2) << '\n';
}

void cmd_eigen(const std::string& matrix_path, std::ostream& out) {
    const Matrix a = read_matrix_csv(matrix_path);
    double asymmetry = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            asymmetry = std::max(asymmetry, std::abs(a(i, j) - a(j, i)));
    if (asymmetry > 1e-9 * std::max(1.0, a.frobenius_norm()))
        throw InvalidInput(matrix_path + ": matrix is not symmetric (max asymmetry " +
                           format_value(asymmetry) + ")");

    const EigenDecomposition eig = jacobi_eigen(SymMatrix(a));
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const Vector v = canonicalize({eig.eigenvectors[k], 0.0}).normal;
        out << format_value(eig.eigenvalues[k]) << ": " << format_row(v) << '\n';
    }
}

}  // namespace reflectfit::cli
