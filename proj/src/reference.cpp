#include "hyptv/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hyptv::ref {

namespace {

const double kPi = std::acos(-1.0);

// Applies an r x d matrix to every axis fiber of length d.
Cube apply_along_axis(const Cube& t, int axis, const Mat& a) {
    return contract_naive(t, axis, a);
}

void clamp3(int& v, int lo, int hi) { v = std::max(lo, std::min(hi, v)); }

}  // namespace

Mat dct2_matrix(int n) {
    Mat c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.at(i, j) = std::cos(i * (j + 0.5) * kPi / n);
    return c;
}

Mat dct3_matrix(int n) {
    // Row j of the inverse: x_j = X_0/n + (2/n) sum_{i>=1} X_i cos(i(j+1/2)pi/n).
    Mat c(n, n);
    for (int j = 0; j < n; ++j) {
        c.at(j, 0) = 1.0 / n;
        for (int i = 1; i < n; ++i)
            c.at(j, i) = 2.0 / n * std::cos(i * (j + 0.5) * kPi / n);
    }
    return c;
}

Cube dct2_axis(const Cube& t, int axis) {
    return apply_along_axis(t, axis, dct2_matrix(t.dim(axis)));
}

Cube dct3_axis(const Cube& t, int axis) {
    return apply_along_axis(t, axis, dct3_matrix(t.dim(axis)));
}

Cube contract_naive(const Cube& t, int mode, const Mat& a) {
    if (a.cols != t.dim(mode))
        throw std::invalid_argument("contract_naive: dimension mismatch");
    const int r = a.rows;
    switch (mode) {
        case 1: {
            Cube out(r, t.n, t.o);
            for (int k = 0; k < t.o; ++k)
                for (int j = 0; j < t.n; ++j)
                    for (int p = 0; p < r; ++p) {
                        double acc = 0.0;
                        for (int i = 0; i < t.m; ++i) acc += a.at(p, i) * t.at(i, j, k);
                        out.at(p, j, k) = acc;
                    }
            return out;
        }
        case 2: {
            Cube out(t.m, r, t.o);
            for (int k = 0; k < t.o; ++k)
                for (int p = 0; p < r; ++p)
                    for (int i = 0; i < t.m; ++i) {
                        double acc = 0.0;
                        for (int j = 0; j < t.n; ++j) acc += a.at(p, j) * t.at(i, j, k);
                        out.at(i, p, k) = acc;
                    }
            return out;
        }
        case 3: {
            Cube out(t.m, t.n, r);
            for (int p = 0; p < r; ++p)
                for (int j = 0; j < t.n; ++j)
                    for (int i = 0; i < t.m; ++i) {
                        double acc = 0.0;
                        for (int k = 0; k < t.o; ++k) acc += a.at(p, k) * t.at(i, j, k);
                        out.at(i, j, p) = acc;
                    }
            return out;
        }
        default:
            throw std::invalid_argument("contract_naive: mode must be 1, 2 or 3");
    }
}

Cube diff_apply(const Cube& t, int axis) {
    return contract_naive(t, axis, materialize_diff(t.dim(axis)));
}

Cube diff_adjoint(const Cube& t, int axis) {
    const Mat d = materialize_diff(t.dim(axis) + 1);
    Mat dt(d.cols, d.rows);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j) dt.at(j, i) = d.at(i, j);
    return contract_naive(t, axis, dt);
}

Cube soft_threshold(const Cube& t, double tau) {
    Cube out = t;
    for (double& v : out.data) {
        const double mag = std::abs(v) - tau;
        v = mag > 0.0 ? (v > 0.0 ? mag : -mag) : 0.0;
    }
    return out;
}

Cube solve_sylvester(const Cube& b, const SylvesterWeights& w) {
    if (!(w.alpha > 0.0) || w.rho < 0.0)
        throw std::invalid_argument("ref::solve_sylvester: singular weight configuration");
    Cube x = b;
    for (int a = 1; a <= 3; ++a)
        if (w.active[a - 1] && b.dim(a) > 1) x = dct2_axis(x, a);
    std::vector<double> s[3];
    for (int a = 0; a < 3; ++a)
        s[a] = w.active[a] ? neumann_eigs(b.dim(a + 1)).s
                           : std::vector<double>(b.dim(a + 1), 0.0);
    for (int k = 0; k < x.o; ++k)
        for (int j = 0; j < x.n; ++j)
            for (int i = 0; i < x.m; ++i)
                x.at(i, j, k) /= w.alpha + w.rho * (s[0][i] + s[1][j] + s[2][k]);
    for (int a = 1; a <= 3; ++a)
        if (w.active[a - 1] && b.dim(a) > 1) x = dct3_axis(x, a);
    return x;
}

Cube median3(const Cube& y) {
    Cube out(y.m, y.n, y.o);
    std::vector<double> window;
    window.reserve(27);
    for (int k = 0; k < y.o; ++k)
        for (int j = 0; j < y.n; ++j)
            for (int i = 0; i < y.m; ++i) {
                window.clear();
                for (int dk = -1; dk <= 1; ++dk)
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int di = -1; di <= 1; ++di) {
                            int ii = i + di, jj = j + dj, kk = k + dk;
                            clamp3(ii, 0, y.m - 1);
                            clamp3(jj, 0, y.n - 1);
                            clamp3(kk, 0, y.o - 1);
                            window.push_back(y.at(ii, jj, kk));
                        }
                std::sort(window.begin(), window.end());
                out.at(i, j, k) = window[13];
            }
    return out;
}

Cube wiener3(const Cube& y, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("ref::wiener3: sigma must be >= 0");
    if (sigma == 0.0) return y;
    const double s2 = sigma * sigma;
    Cube out(y.m, y.n, y.o);
    for (int k = 0; k < y.o; ++k)
        for (int j = 0; j < y.n; ++j)
            for (int i = 0; i < y.m; ++i) {
                double sum = 0.0, sumsq = 0.0;
                for (int dk = -1; dk <= 1; ++dk)
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int di = -1; di <= 1; ++di) {
                            int ii = i + di, jj = j + dj, kk = k + dk;
                            clamp3(ii, 0, y.m - 1);
                            clamp3(jj, 0, y.n - 1);
                            clamp3(kk, 0, y.o - 1);
                            const double v = y.at(ii, jj, kk);
                            sum += v;
                            sumsq += v * v;
                        }
                const double mean = sum / 27.0;
                const double var = sumsq / 27.0 - mean * mean;
                const double x = y.at(i, j, k);
                out.at(i, j, k) =
                    var >= s2 ? (s2 / var) * mean + (1.0 - s2 / var) * x : mean;
            }
    return out;
}

}  // namespace hyptv::ref
