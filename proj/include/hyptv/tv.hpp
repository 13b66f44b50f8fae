#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hyptv/tensor.hpp"

namespace hyptv {

/// Shared ADMM solver knobs. rho is the penalty, lambda_s weighs the two
/// spatial TV terms, lambda_t the spectral one. Tolerances are relative
/// to the Frobenius norm of the input.
struct AdmmConfig {
    double rho = 10.0;
    double lambda_s = 0.0;
    double lambda_t = 0.0;
    int max_iters = 500;
    double tol_primal = 1e-6;
    double tol_dual = 1e-6;
    std::uint64_t seed = 0;

    void validate() const;
};

struct IterationRecord {
    double objective = 0.0;
    double primal_res = 0.0;
    double dual_res = 0.0;
};

struct SolveDiagnostics {
    std::vector<IterationRecord> history;
    int iterations = 0;
    bool converged = false;
};

/// Soft threshold sgn(x) * max(|x| - tau, 0), the l1 proximal operator.
double soft(double x, double tau);
Mat soft(const Mat& a, double tau);
Cube soft(const Cube& t, double tau);

/// Serial reductions (deterministic order).
double frob_norm(const Cube& t);
double frob_norm(const Mat& a);
double l1_norm(const Cube& t);
double l1_norm(const Mat& a);

/// Weighted anisotropic TV: lambda_s (|t x1 D|_1 + |t x2 D|_1) + lambda_t |t x3 D|_1.
/// Axes of length 1 contribute nothing.
double total_variation(const Cube& t, double lambda_s, double lambda_t);

/// 1D TV denoising, min_x 1/2 |y-x|^2 + lambda |D x|_1, by ADMM with the
/// DCT-diagonalized x-solve. lambda == 0 returns the input unchanged.
std::pair<std::vector<double>, SolveDiagnostics> tv1d(const std::vector<double>& y,
                                                      double lambda,
                                                      const AdmmConfig& cfg);

/// Snapshot handed to the optional tv3d_denoise observer after each
/// iteration; entries of z/u are empty cubes on inactive axes.
struct TvIterationView {
    int iteration;
    const Cube& x;
    const Cube& b;  // right-hand side of the Sylvester solve this iteration
    const std::array<Cube, 3>& z;
    const std::array<Cube, 3>& u;
    const std::array<bool, 3>& active;
};
using TvObserver = std::function<void(const TvIterationView&)>;

/// 3D anisotropic TV filter: min_x 1/2 |y-x|_F^2 + TV(x) with the weights
/// from cfg. Four-block ADMM; the x-update is one Sylvester solve, each
/// z-update one soft threshold. Axes with weight 0 or length 1 carry no
/// split block; with no active block the input is returned unchanged.
std::pair<Cube, SolveDiagnostics> tv3d_denoise(const Cube& y, const AdmmConfig& cfg,
                                               const TvObserver& observer = {});

}  // namespace hyptv
