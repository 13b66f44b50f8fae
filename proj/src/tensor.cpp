#include "hyptv/tensor.hpp"

#include <stdexcept>
#include <string>

namespace hyptv {

Cube::Cube(int m_, int n_, int o_, double fill) : m(m_), n(n_), o(o_) {
    if (m < 1 || n < 1 || o < 1)
        throw std::invalid_argument("Cube: all dims must be >= 1");
    data.assign(static_cast<std::size_t>(m) * n * o, fill);
}

int Cube::dim(int axis) const {
    switch (axis) {
        case 1: return m;
        case 2: return n;
        case 3: return o;
        default: throw std::invalid_argument("Cube::dim: axis must be 1, 2 or 3");
    }
}

Mat::Mat(int rows_, int cols_, double fill) : rows(rows_), cols(cols_) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("Mat: rows and cols must be >= 1");
    data.assign(static_cast<std::size_t>(rows) * cols, fill);
}

Mat Mat::identity(int n) {
    Mat eye(n, n, 0.0);
    for (int i = 0; i < n; ++i) eye.at(i, i) = 1.0;
    return eye;
}

Mat unfold(const Cube& t, int mode) {
    switch (mode) {
        case 1: {
            // Column (j + n*k): same linear order as the cube buffer.
            Mat a(t.m, t.n * t.o);
            a.data = t.data;
            return a;
        }
        case 2: {
            Mat a(t.n, t.m * t.o);
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i < t.m; ++i)
                        a.at(j, i + t.m * k) = t.at(i, j, k);
            return a;
        }
        case 3: {
            Mat a(t.o, t.m * t.n);
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i < t.m; ++i)
                        a.at(k, i + t.m * j) = t.at(i, j, k);
            return a;
        }
        default:
            throw std::invalid_argument("unfold: mode must be 1, 2 or 3");
    }
}

Cube fold(const Mat& a, int mode, int m, int n, int o) {
    const auto bad_shape = [&](int r, int c) {
        return a.rows != r || a.cols != c;
    };
    Cube t(m, n, o);
    switch (mode) {
        case 1:
            if (bad_shape(m, n * o))
                throw std::invalid_argument("fold: matrix shape does not match mode-1 unfolding");
            t.data = a.data;
            return t;
        case 2:
            if (bad_shape(n, m * o))
                throw std::invalid_argument("fold: matrix shape does not match mode-2 unfolding");
            for (int k = 0; k < o; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < m; ++i)
                        t.at(i, j, k) = a.at(j, i + m * k);
            return t;
        case 3:
            if (bad_shape(o, m * n))
                throw std::invalid_argument("fold: matrix shape does not match mode-3 unfolding");
            for (int k = 0; k < o; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < m; ++i)
                        t.at(i, j, k) = a.at(k, i + m * j);
            return t;
        default:
            throw std::invalid_argument("fold: mode must be 1, 2 or 3");
    }
}

Cube contract(const Cube& t, int mode, const Mat& a) {
    if (a.cols != t.dim(mode))
        throw std::invalid_argument(
            "contract: matrix has " + std::to_string(a.cols) +
            " cols but mode-" + std::to_string(mode) + " length is " +
            std::to_string(t.dim(mode)));
    const int r = a.rows;
    const auto am = as_eigen(a);
    switch (mode) {
        case 1: {
            Cube out(r, t.n, t.o);
            Eigen::Map<const Eigen::MatrixXd> tm(t.data.data(), t.m,
                                                 static_cast<Eigen::Index>(t.n) * t.o);
            Eigen::Map<Eigen::MatrixXd> om(out.data.data(), r,
                                           static_cast<Eigen::Index>(t.n) * t.o);
            om.noalias() = am * tm;
            return out;
        }
        case 2: {
            // Slice k is a contiguous m x n block; contracting mode 2
            // right-multiplies it by A^T.
            Cube out(t.m, r, t.o);
            const std::size_t in_slice = static_cast<std::size_t>(t.m) * t.n;
            const std::size_t out_slice = static_cast<std::size_t>(t.m) * r;
#pragma omp parallel for schedule(static)
            for (int k = 0; k < t.o; ++k) {
                Eigen::Map<const Eigen::MatrixXd> sk(t.data.data() + in_slice * k, t.m, t.n);
                Eigen::Map<Eigen::MatrixXd> ok(out.data.data() + out_slice * k, t.m, r);
                ok.noalias() = sk * am.transpose();
            }
            return out;
        }
        case 3: {
            Cube out(t.m, t.n, r);
            Eigen::Map<const Eigen::MatrixXd> tm(t.data.data(),
                                                 static_cast<Eigen::Index>(t.m) * t.n, t.o);
            Eigen::Map<Eigen::MatrixXd> om(out.data.data(),
                                           static_cast<Eigen::Index>(t.m) * t.n, r);
            om.noalias() = tm * am.transpose();
            return out;
        }
        default:
            throw std::invalid_argument("contract: mode must be 1, 2 or 3");
    }
}

Cube diff_apply(const Cube& t, int axis) {
    const int d = t.dim(axis);
    if (d < 2)
        throw std::invalid_argument("diff_apply: axis length must be >= 2");
    switch (axis) {
        case 1: {
            Cube out(t.m - 1, t.n, t.o);
#pragma omp parallel for schedule(static)
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i + 1 < t.m; ++i)
                        out.at(i, j, k) = t.at(i, j, k) - t.at(i + 1, j, k);
            return out;
        }
        case 2: {
            Cube out(t.m, t.n - 1, t.o);
#pragma omp parallel for schedule(static)
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j + 1 < t.n; ++j)
                    for (int i = 0; i < t.m; ++i)
                        out.at(i, j, k) = t.at(i, j, k) - t.at(i, j + 1, k);
            return out;
        }
        default: {
            Cube out(t.m, t.n, t.o - 1);
#pragma omp parallel for schedule(static)
            for (int k = 0; k + 1 < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i < t.m; ++i)
                        out.at(i, j, k) = t.at(i, j, k) - t.at(i, j, k + 1);
            return out;
        }
    }
}

Cube diff_adjoint(const Cube& t, int axis) {
    // (D^T z)_j = z_j - z_{j-1}, with the out-of-range terms dropped.
    switch (axis) {
        case 1: {
            Cube out(t.m + 1, t.n, t.o);
#pragma omp parallel for schedule(static)
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i <= t.m; ++i) {
                        double v = 0.0;
                        if (i < t.m) v += t.at(i, j, k);
                        if (i > 0) v -= t.at(i - 1, j, k);
                        out.at(i, j, k) = v;
                    }
            return out;
        }
        case 2: {
            Cube out(t.m, t.n + 1, t.o);
#pragma omp parallel for schedule(static)
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j <= t.n; ++j)
                    for (int i = 0; i < t.m; ++i) {
                        double v = 0.0;
                        if (j < t.n) v += t.at(i, j, k);
                        if (j > 0) v -= t.at(i, j - 1, k);
                        out.at(i, j, k) = v;
                    }
            return out;
        }
        case 3: {
            Cube out(t.m, t.n, t.o + 1);
#pragma omp parallel for schedule(static)
            for (int k = 0; k <= t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i < t.m; ++i) {
                        double v = 0.0;
                        if (k < t.o) v += t.at(i, j, k);
                        if (k > 0) v -= t.at(i, j, k - 1);
                        out.at(i, j, k) = v;
                    }
            return out;
        }
        default:
            throw std::invalid_argument("diff_adjoint: axis must be 1, 2 or 3");
    }
}

Mat materialize_diff(int n) {
    if (n < 2)
        throw std::invalid_argument("materialize_diff: n must be >= 2");
    Mat d(n - 1, n, 0.0);
    for (int i = 0; i < n - 1; ++i) {
        d.at(i, i) = 1.0;
        d.at(i, i + 1) = -1.0;
    }
    return d;
}

Mat materialize_laplacian(int n) {
    if (n < 1)
        throw std::invalid_argument("materialize_laplacian: n must be >= 1");
    Mat l(n, n, 0.0);
    if (n == 1) return l;  // D_1 is empty, so L_1 = (0)
    for (int i = 0; i < n; ++i) {
        l.at(i, i) = (i == 0 || i == n - 1) ? 1.0 : 2.0;
        if (i + 1 < n) {
            l.at(i, i + 1) = -1.0;
            l.at(i + 1, i) = -1.0;
        }
    }
    return l;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows * b.rows, a.cols * b.cols, 0.0);
    for (int ja = 0; ja < a.cols; ++ja)
        for (int ia = 0; ia < a.rows; ++ia) {
            const double v = a.at(ia, ja);
            if (v == 0.0) continue;
            for (int jb = 0; jb < b.cols; ++jb)
                for (int ib = 0; ib < b.rows; ++ib)
                    out.at(ia * b.rows + ib, ja * b.cols + jb) = v * b.at(ib, jb);
        }
    return out;
}

Mat kron_sum(const Mat& a, const Mat& b) {
    if (a.rows != a.cols || b.rows != b.cols)
        throw std::invalid_argument("kron_sum: inputs must be square");
    Mat left = kron(a, Mat::identity(b.rows));
    Mat right = kron(Mat::identity(a.rows), b);
    for (std::size_t i = 0; i < left.data.size(); ++i) left.data[i] += right.data[i];
    return left;
}

}  // namespace hyptv
