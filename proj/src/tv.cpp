#include "hyptv/tv.hpp"

#include <cmath>
#include <stdexcept>

#include "hyptv/transforms.hpp"

namespace hyptv {

void AdmmConfig::validate() const {
    if (!(rho > 0.0)) throw std::invalid_argument("AdmmConfig: rho must be > 0");
    if (lambda_s < 0.0 || lambda_t < 0.0)
        throw std::invalid_argument("AdmmConfig: TV weights must be >= 0");
    if (max_iters < 1) throw std::invalid_argument("AdmmConfig: max_iters must be >= 1");
    if (tol_primal < 0.0 || tol_dual < 0.0)
        throw std::invalid_argument("AdmmConfig: tolerances must be >= 0");
}

double soft(double x, double tau) {
    const double mag = std::abs(x) - tau;
    if (mag <= 0.0) return 0.0;
    return x > 0.0 ? mag : -mag;
}

namespace {

void soft_inplace(std::vector<double>& v, double tau) {
    const long n = static_cast<long>(v.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) v[i] = soft(v[i], tau);
}

double frob_of(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::ArrayXd>(v.data(), v.size()).matrix().norm();
}

double l1_of(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::ArrayXd>(v.data(), v.size()).abs().sum();
}

}  // namespace

Mat soft(const Mat& a, double tau) {
    Mat out = a;
    soft_inplace(out.data, tau);
    return out;
}

Cube soft(const Cube& t, double tau) {
    Cube out = t;
    soft_inplace(out.data, tau);
    return out;
}

double frob_norm(const Cube& t) { return frob_of(t.data); }
double frob_norm(const Mat& a) { return frob_of(a.data); }
double l1_norm(const Cube& t) { return l1_of(t.data); }
double l1_norm(const Mat& a) { return l1_of(a.data); }

double total_variation(const Cube& t, double lambda_s, double lambda_t) {
    double tv = 0.0;
    if (lambda_s != 0.0) {
        if (t.m >= 2) tv += lambda_s * l1_norm(diff_apply(t, 1));
        if (t.n >= 2) tv += lambda_s * l1_norm(diff_apply(t, 2));
    }
    if (lambda_t != 0.0 && t.o >= 2) tv += lambda_t * l1_norm(diff_apply(t, 3));
    return tv;
}

std::pair<std::vector<double>, SolveDiagnostics> tv1d(const std::vector<double>& y,
                                                      double lambda,
                                                      const AdmmConfig& cfg) {
    cfg.validate();
    if (lambda < 0.0) throw std::invalid_argument("tv1d: lambda must be >= 0");
    const int n = static_cast<int>(y.size());
    if (n < 1) throw std::invalid_argument("tv1d: input must be non-empty");

    SolveDiagnostics diag;
    if (lambda == 0.0 || n == 1) {
        // The ADMM fixed point is the input; return it exactly.
        diag.converged = true;
        return {y, diag};
    }

    Cube yc(n, 1, 1);
    yc.data = y;
    const double rho = cfg.rho;
    const double scale = std::max(frob_norm(yc), 1e-30);
    SylvesterWeights w;
    w.alpha = 1.0;
    w.rho = rho;
    w.active = {true, false, false};

    Cube x = yc;
    Cube z(n - 1, 1, 1), u(n - 1, 1, 1);

    for (int it = 0; it < cfg.max_iters; ++it) {
        Cube dx = diff_apply(x, 1);
        const Cube z_prev = z;
        for (int i = 0; i < n - 1; ++i)
            z.data[i] = soft(dx.data[i] + u.data[i], lambda / rho);

        Cube b = yc;
        {
            Cube zu = z;
            for (int i = 0; i < n - 1; ++i) zu.data[i] -= u.data[i];
            const Cube adj = diff_adjoint(zu, 1);
            for (int i = 0; i < n; ++i) b.data[i] += rho * adj.data[i];
        }
        x = solve_sylvester(b, w);

        dx = diff_apply(x, 1);
        for (int i = 0; i < n - 1; ++i) u.data[i] += dx.data[i] - z.data[i];

        IterationRecord rec;
        {
            Cube r = dx;
            for (int i = 0; i < n - 1; ++i) r.data[i] -= z.data[i];
            rec.primal_res = frob_norm(r);
            Cube dz = z;
            for (int i = 0; i < n - 1; ++i) dz.data[i] -= z_prev.data[i];
            rec.dual_res = rho * frob_norm(diff_adjoint(dz, 1));
        }
        double fit = 0.0;
        for (int i = 0; i < n; ++i) fit += (y[i] - x.data[i]) * (y[i] - x.data[i]);
        rec.objective = 0.5 * fit + lambda * l1_norm(dx);
        diag.history.push_back(rec);
        diag.iterations = it + 1;
        if (rec.primal_res <= cfg.tol_primal * scale &&
            rec.dual_res <= cfg.tol_dual * scale) {
            diag.converged = true;
            break;
        }
    }
    return {x.data, diag};
}

std::pair<Cube, SolveDiagnostics> tv3d_denoise(const Cube& y, const AdmmConfig& cfg,
                                               const TvObserver& observer) {
    cfg.validate();
    const std::array<double, 3> lambda = {cfg.lambda_s, cfg.lambda_s, cfg.lambda_t};
    std::array<bool, 3> active{};
    for (int a = 0; a < 3; ++a) active[a] = lambda[a] > 0.0 && y.dim(a + 1) >= 2;

    SolveDiagnostics diag;
    if (!active[0] && !active[1] && !active[2]) {
        diag.converged = true;
        return {y, diag};
    }

    const double rho = cfg.rho;
    const double scale = std::max(frob_norm(y), 1e-30);
    SylvesterWeights w;
    w.alpha = 1.0;
    w.rho = rho;
    w.active = active;

    Cube x = y;
    std::array<Cube, 3> z, u;
    for (int a = 0; a < 3; ++a)
        if (active[a]) {
            Cube dx = diff_apply(x, a + 1);
            z[a] = Cube(dx.m, dx.n, dx.o);
            u[a] = z[a];
        }

    for (int it = 0; it < cfg.max_iters; ++it) {
        Cube b = y;
        for (int a = 0; a < 3; ++a) {
            if (!active[a]) continue;
            Cube zu = z[a];
            for (std::size_t i = 0; i < zu.data.size(); ++i) zu.data[i] -= u[a].data[i];
            const Cube adj = diff_adjoint(zu, a + 1);
            for (std::size_t i = 0; i < b.data.size(); ++i) b.data[i] += rho * adj.data[i];
        }
        x = solve_sylvester(b, w);

        double primal_sq = 0.0, dual_sq = 0.0;
        for (int a = 0; a < 3; ++a) {
            if (!active[a]) continue;
            const Cube dx = diff_apply(x, a + 1);
            Cube z_prev = std::move(z[a]);
            Cube arg = dx;
            for (std::size_t i = 0; i < arg.data.size(); ++i) arg.data[i] += u[a].data[i];
            z[a] = soft(arg, lambda[a] / rho);
            for (std::size_t i = 0; i < dx.data.size(); ++i) {
                const double r = dx.data[i] - z[a].data[i];
                u[a].data[i] += r;
                primal_sq += r * r;
            }
            for (std::size_t i = 0; i < z_prev.data.size(); ++i)
                z_prev.data[i] = z[a].data[i] - z_prev.data[i];
            const double dn = frob_norm(diff_adjoint(z_prev, a + 1));
            dual_sq += dn * dn;
        }

        IterationRecord rec;
        rec.primal_res = std::sqrt(primal_sq);
        rec.dual_res = rho * std::sqrt(dual_sq);
        double fit_sq = 0.0;
        for (std::size_t i = 0; i < x.data.size(); ++i) {
            const double d = y.data[i] - x.data[i];
            fit_sq += d * d;
        }
        rec.objective = 0.5 * fit_sq + total_variation(x, cfg.lambda_s, cfg.lambda_t);
        diag.history.push_back(rec);
        diag.iterations = it + 1;

        if (observer) observer({it, x, b, z, u, active});

        if (rec.primal_res <= cfg.tol_primal * scale &&
            rec.dual_res <= cfg.tol_dual * scale) {
            diag.converged = true;
            break;
        }
    }
    return {x, diag};
}

}  // namespace hyptv
