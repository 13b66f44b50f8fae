#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace hyptv {

/// Dense order-3 tensor of doubles. Linearization is fixed: the first
/// index varies fastest, data[i + m*(j + n*k)] holds entry (i,j,k).
struct Cube {
    int m = 0, n = 0, o = 0;
    std::vector<double> data;

    Cube() = default;
    Cube(int m_, int n_, int o_, double fill = 0.0);

    /// Axis length, axis in {1,2,3}.
    int dim(int axis) const;

    std::size_t size() const { return data.size(); }

    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(m) *
                   (static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    }
    double& at(int i, int j, int k) { return data[idx(i, j, k)]; }
    double at(int i, int j, int k) const { return data[idx(i, j, k)]; }

    bool same_dims(const Cube& other) const {
        return m == other.m && n == other.n && o == other.o;
    }
};

/// Dense matrix, column-major (first index fastest), so it maps directly
/// onto Eigen's default layout.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int rows_, int cols_, double fill = 0.0);

    std::size_t size() const { return data.size(); }

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(rows) * static_cast<std::size_t>(j);
    }
    double& at(int i, int j) { return data[idx(i, j)]; }
    double at(int i, int j) const { return data[idx(i, j)]; }

    static Mat identity(int n);
};

inline Eigen::Map<Eigen::MatrixXd> as_eigen(Mat& a) {
    return {a.data.data(), a.rows, a.cols};
}
inline Eigen::Map<const Eigen::MatrixXd> as_eigen(const Mat& a) {
    return {a.data.data(), a.rows, a.cols};
}

/// Mode-k unfolding (Kolda-Bader): mode-k fibers become columns, the
/// remaining indices order the columns with the lower-numbered mode
/// varying fastest. Mode 1 of an m x n x o cube gives m x (n*o).
Mat unfold(const Cube& t, int mode);

/// Exact inverse of unfold for the given mode and target dims.
Cube fold(const Mat& a, int mode, int m, int n, int o);

/// Mode-k tensor-matrix contraction: unfold(contract(t,k,A), k) = A * unfold(t,k).
/// Requires a.cols == t.dim(mode). Computed as one dense product per the
/// unfolding identity, without materializing permuted copies.
Cube contract(const Cube& t, int mode, const Mat& a);

/// Forward difference along an axis, (x_i - x_{i+1}); output axis length
/// shrinks by one. Matrix-free application of the (d-1) x d operator.
Cube diff_apply(const Cube& t, int axis);

/// Adjoint of diff_apply: maps axis length d to d+1.
Cube diff_adjoint(const Cube& t, int axis);

/// Materialized forward-difference operator, rows (..., 1, -1, ...).
/// Oracle/test use; solvers apply it matrix-free. Requires n >= 2.
Mat materialize_diff(int n);

/// L_n = D_n^T D_n, tridiagonal with diagonal (1,2,...,2,1). L_1 = (0).
Mat materialize_laplacian(int n);

/// Kronecker product. Oracle-grade (dense); test/support code paths only.
Mat kron(const Mat& a, const Mat& b);

/// Kronecker sum A (+) B = A (x) I_n + I_m (x) B of square matrices.
/// Three-term sums associate to the left; the operation does not commute.
Mat kron_sum(const Mat& a, const Mat& b);

}  // namespace hyptv
