#include "hyptv/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "hyptv/rng.hpp"

namespace hyptv {

namespace {

constexpr double kEps = 1e-12;  // denominator guard for multiplicative updates

inline int clampi(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

double median_of(std::vector<double>& v) {
    const auto mid = v.begin() + v.size() / 2;
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace

Cube median3(const Cube& y) {
    Cube out(y.m, y.n, y.o);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < y.o; ++k)
        for (int j = 0; j < y.n; ++j)
            for (int i = 0; i < y.m; ++i) {
                double window[27];
                int w = 0;
                for (int dk = -1; dk <= 1; ++dk)
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int di = -1; di <= 1; ++di)
                            window[w++] = y.at(clampi(i + di, 0, y.m - 1),
                                               clampi(j + dj, 0, y.n - 1),
                                               clampi(k + dk, 0, y.o - 1));
                std::nth_element(window, window + 13, window + 27);
                out.at(i, j, k) = window[13];
            }
    return out;
}

Cube wiener3(const Cube& y, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("wiener3: sigma must be >= 0");
    if (sigma == 0.0) return y;
    const double s2 = sigma * sigma;
    Cube out(y.m, y.n, y.o);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < y.o; ++k)
        for (int j = 0; j < y.n; ++j)
            for (int i = 0; i < y.m; ++i) {
                double sum = 0.0, sumsq = 0.0;
                for (int dk = -1; dk <= 1; ++dk)
                    for (int dj = -1; dj <= 1; ++dj)
                        for (int di = -1; di <= 1; ++di) {
                            const double v = y.at(clampi(i + di, 0, y.m - 1),
                                                  clampi(j + dj, 0, y.n - 1),
                                                  clampi(k + dk, 0, y.o - 1));
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

double estimate_noise_mad(const Cube& y) {
    // First differences along the longest feasible axis; for piecewise
    // constant scenes most of them are pure noise. Var(x_i - x_{i+1}) = 2 sigma^2.
    const int axis = y.m >= 2 ? 1 : (y.n >= 2 ? 2 : 3);
    if (y.dim(axis) < 2) return 0.0;
    Cube d = diff_apply(y, axis);
    std::vector<double> v = d.data;
    const double med = median_of(v);
    for (double& x : v) x = std::abs(x - med);
    return 1.4826 * median_of(v) / std::sqrt(2.0);
}

Mat nnls_pg(const Mat& w, const Mat& y, int steps) {
    if (w.rows != y.rows)
        throw std::invalid_argument("nnls_pg: row count mismatch");
    const int k = w.cols;
    const auto wm = as_eigen(w);
    const auto ym = as_eigen(y);
    Eigen::MatrixXd gram = wm.transpose() * wm;
    const Eigen::MatrixXd f = wm.transpose() * ym;

    // Gershgorin bound on the top eigenvalue gives a safe step size.
    double lips = 0.0;
    for (int i = 0; i < k; ++i) lips = std::max(lips, gram.row(i).cwiseAbs().sum());
    lips = std::max(lips, 1e-30);

    Eigen::MatrixXd ridge = gram;
    ridge.diagonal().array() += 1e-10 * std::max(1.0, gram.trace());
    Eigen::MatrixXd h = ridge.ldlt().solve(f).cwiseMax(0.0);
    for (int it = 0; it < steps; ++it)
        h = (h - (gram * h - f) / lips).cwiseMax(0.0);

    Mat out(k, y.cols);
    as_eigen(out) = h;
    return out;
}

FactorPair lee_seung(const Mat& m, int k, int iters, std::uint64_t seed,
                     std::vector<double>* objectives) {
    if (k < 1) throw std::invalid_argument("lee_seung: k must be >= 1");
    for (double v : m.data)
        if (v < 0.0)
            throw std::invalid_argument("lee_seung: input has negative entries");

    const auto mm = as_eigen(m);
    const double mean = mm.mean();
    const double init_scale = mean > 0.0 ? std::sqrt(mean / k) : 0.0;

    Rng rng(seed);
    Eigen::MatrixXd w(m.rows, k), h(k, m.cols);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m.rows; ++i) w(i, j) = init_scale * rng.u01();
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < k; ++i) h(i, j) = init_scale * rng.u01();

    if (objectives) {
        objectives->clear();
        objectives->push_back(0.5 * (mm - w * h).squaredNorm());
    }
    for (int it = 0; it < iters; ++it) {
        h.array() *= (w.transpose() * mm).array() /
                     ((w.transpose() * w * h).array() + kEps);
        w.array() *= (mm * h.transpose()).array() /
                     ((w * (h * h.transpose())).array() + kEps);
        if (objectives) objectives->push_back(0.5 * (mm - w * h).squaredNorm());
    }

    FactorPair out{Mat(m.rows, k), Mat(k, m.cols)};
    as_eigen(out.w) = w;
    as_eigen(out.h) = h;
    return out;
}

SpaResult spa(const Mat& m, int k) {
    if (k < 1 || k > m.cols)
        throw std::invalid_argument("spa: k must be in [1, cols]");
    Eigen::MatrixXd r = as_eigen(m);
    const double floor2 = 1e-24 * std::max(1.0, r.colwise().squaredNorm().maxCoeff());

    SpaResult res;
    for (int t = 0; t < k; ++t) {
        const Eigen::VectorXd norms2 = r.colwise().squaredNorm();
        int best = 0;
        for (int j = 1; j < r.cols(); ++j)
            if (norms2(j) > norms2(best)) best = j;  // ties keep the lowest index
        if (norms2(best) <= floor2) {
            res.complete = false;  // rank exhausted before k picks
            break;
        }
        res.indices.push_back(best);
        const Eigen::VectorXd u = r.col(best) / std::sqrt(norms2(best));
        r -= u * (u.transpose() * r);
    }

    const int picked = static_cast<int>(res.indices.size());
    res.w = Mat(m.rows, std::max(picked, 1));
    for (int t = 0; t < picked; ++t)
        for (int i = 0; i < m.rows; ++i) res.w.at(i, t) = m.at(i, res.indices[t]);
    return res;
}

FactorPair admm_nmf(const Mat& m, int k, const AdmmConfig& cfg,
                    SolveDiagnostics* diag) {
    cfg.validate();
    if (k < 1) throw std::invalid_argument("admm_nmf: k must be >= 1");
    const auto mm = as_eigen(m);
    const double rho = cfg.rho;
    const double scale = std::max(mm.norm(), 1e-30);

    const double mean = mm.mean();
    const double init_scale = mean > 0.0 ? std::sqrt(std::abs(mean) / k) : 1.0;
    Rng rng(cfg.seed);
    Eigen::MatrixXd x1(m.rows, k), z2(k, m.cols);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m.rows; ++i) x1(i, j) = init_scale * rng.u01();
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < k; ++i) z2(i, j) = init_scale * rng.u01();
    Eigen::MatrixXd z1 = x1, x2 = z2;
    Eigen::MatrixXd u1 = Eigen::MatrixXd::Zero(m.rows, k);
    Eigen::MatrixXd u2 = Eigen::MatrixXd::Zero(k, m.cols);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(k, k);

    if (diag) *diag = SolveDiagnostics{};
    for (int it = 0; it < cfg.max_iters; ++it) {
        const Eigen::MatrixXd z1_prev = z1, z2_prev = z2;
        x1 = (mm * z2.transpose() + rho * (z1 - u1)) *
             (z2 * z2.transpose() + rho * eye).ldlt().solve(eye);
        x2 = (z2 - u2).cwiseMax(0.0);
        z1 = (x1 + u1).cwiseMax(0.0);
        z2 = (x1.transpose() * x1 + rho * eye)
                 .ldlt()
                 .solve(x1.transpose() * mm + rho * (x2 + u2));
        u1 += x1 - z1;
        u2 += x2 - z2;

        const double primal =
            std::sqrt((x1 - z1).squaredNorm() + (x2 - z2).squaredNorm());
        const double dual = rho * std::sqrt((z1 - z1_prev).squaredNorm() +
                                            (z2 - z2_prev).squaredNorm());
        if (diag) {
            IterationRecord rec;
            rec.objective = 0.5 * (mm - x1 * z2).squaredNorm();
            rec.primal_res = primal;
            rec.dual_res = dual;
            diag->history.push_back(rec);
            diag->iterations = it + 1;
        }
        if (primal <= cfg.tol_primal * scale && dual <= cfg.tol_dual * scale) {
            if (diag) diag->converged = true;
            break;
        }
    }

    FactorPair out{Mat(m.rows, k), Mat(k, m.cols)};
    as_eigen(out.w) = z1;
    as_eigen(out.h) = x2;
    return out;
}

}  // namespace hyptv
