#pragma once

// Minimal dense linear algebra for runtime-sized vectors and square D x D
// matrices. D is desk-scale (typically 2 or 3, at most single digits), so
// everything is plain row-major storage and straightforward loops.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "reflectfit/errors.hpp"

namespace reflectfit {

/// A point or direction in R^D.
using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b);
double norm_squared(const Vector& v);
double norm(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, double s);
Vector negated(const Vector& v);
/// v / ||v||; throws InvalidInput on (numerically) zero vectors.
Vector normalized(const Vector& v);
bool all_finite(const Vector& v);

/// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}
    /// Square matrix from row lists; ragged or non-square rows are rejected.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);
    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    double trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

private:
    std::size_t dim_ = 0;
    std::vector<double> entries_;
};

Vector mat_vec(const Matrix& m, const Vector& v);

/// x y^T for same-dimension vectors.
Matrix outer_product(const Vector& x, const Vector& y);

/// Symmetric matrix. Construction symmetrizes, so entries(i,j) == entries(j,i)
/// holds bit-for-bit afterwards.
class SymMatrix {
public:
    explicit SymMatrix(const Matrix& m);

    std::size_t dim() const { return mat_.dim(); }
    double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    const Matrix& matrix() const { return mat_; }

    double trace() const { return mat_.trace(); }
    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double max_abs() const { return mat_.max_abs(); }

private:
    Matrix mat_;
};

/// (B + B^T) / 2.
SymMatrix symmetrize(const Matrix& b);

/// Full spectrum of a symmetric matrix. eigenvalues are ascending and
/// eigenvectors[k] is the unit eigenvector paired with eigenvalues[k].
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    std::vector<Vector> eigenvectors;
};

/// Cyclic Jacobi rotations in row-sweep order. Converged when the
/// off-diagonal Frobenius norm falls to 1e-13 * max(1, ||A||_F); throws
/// ConvergenceError (carrying the residual) if 100 full sweeps do not get
/// there, which for symmetric input should never happen.
EigenDecomposition jacobi_eigen(const SymMatrix& a);

}  // namespace reflectfit
