#include "reflectfit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace reflectfit {

namespace {

void require_same_dim(const Vector& a, const Vector& b, const char* op) {
    if (a.size() != b.size()) {
        throw InvalidInput(std::string(op) + ": dimension mismatch (" +
                           std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
    require_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_squared(const Vector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

double norm(const Vector& v) { return std::sqrt(norm_squared(v)); }

Vector add(const Vector& a, const Vector& b) {
    require_same_dim(a, b, "add");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    require_same_dim(a, b, "sub");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scaled(const Vector& v, double s) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

Vector negated(const Vector& v) { return scaled(v, -1.0); }

Vector normalized(const Vector& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInput("normalized: zero or non-finite vector");
    }
    return scaled(v, 1.0 / n);
}

bool all_finite(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    dim_ = rows.size();
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw InvalidInput("Matrix: rows must form a square matrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw InvalidInput("Matrix: rows must form a square matrix");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double e : entries_) s += e * e;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double x) { return std::isfinite(x); });
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (v.size() != m.dim()) throw InvalidInput("mat_vec: dimension mismatch");
    Vector r(m.dim(), 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Matrix outer_product(const Vector& x, const Vector& y) {
    require_same_dim(x, y, "outer_product");
    Matrix m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    }
    return m;
}

SymMatrix::SymMatrix(const Matrix& m) : mat_(m.dim()) {
    // (m_ij + m_ji) / 2 gives the same rounded value for both slots, so the
    // result is symmetric bit-for-bit.
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = (m(i, j) + m(j, i)) / 2.0;
            mat_(i, j) = v;
            mat_(j, i) = v;
        }
    }
}

SymMatrix symmetrize(const Matrix& b) { return SymMatrix(b); }

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) s += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymMatrix& input) {
    if (!input.matrix().all_finite()) {
        throw InvalidInput("jacobi_eigen: matrix has non-finite entries");
    }
    const std::size_t n = input.dim();
    if (n == 0) throw InvalidInput("jacobi_eigen: empty matrix");

    Matrix a = input.matrix();
    Matrix v = Matrix::identity(n);

    const double tol = 1e-13 * std::max(1.0, input.frobenius_norm());
    constexpr int kMaxSweeps = 100;

    bool converged = off_diagonal_norm(a) <= tol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        // One cyclic sweep: zero each upper-triangle entry in row order.
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;

                // tan(theta) of the rotation that zeroes a(p,q), picking the
                // smaller angle for stability (|t| <= 1).
                const double diff = a(q, q) - a(p, p);
                double t;
                if (std::abs(diff) + 100.0 * std::abs(apq) == std::abs(diff)) {
                    t = apq / diff;
                } else {
                    const double theta = 0.5 * diff / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;

                a(p, p) -= h;
                a(q, q) += h;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = arp - s * (arq + arp * tau);
                    a(p, r) = a(r, p);
                    a(r, q) = arq + s * (arp - arq * tau);
                    a(q, r) = a(r, q);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + vrp * tau);
                    v(r, q) = vrq + s * (vrp - vrq * tau);
                }
            }
        }
        converged = off_diagonal_norm(a) <= tol;
    }

    if (!converged) {
        const double residual = off_diagonal_norm(a);
        throw ConvergenceError(
            "jacobi_eigen: no convergence after 100 sweeps (off-diagonal norm " +
                std::to_string(residual) + ")",
            residual);
    }

    // Ascending eigenvalue order; stable sort keeps tied values in
    // post-rotation column order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition eig;
    eig.eigenvalues.resize(n);
    eig.eigenvectors.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        eig.eigenvalues[k] = a(col, col);
        Vector vec(n);
        for (std::size_t r = 0; r < n; ++r) vec[r] = v(r, col);
        eig.eigenvectors[k] = normalized(vec);
    }
    return eig;
}

}  // namespace reflectfit
