#pragma once

#include <cstdint>
#include <vector>

#include "hyptv/tensor.hpp"
#include "hyptv/tv.hpp"

namespace hyptv {

/// Nonnegative factor pair for the flat NMF problem min |M - W H|_F.
struct FactorPair {
    Mat w;  // bands x k
    Mat h;  // k x pixels
};

/// Per-voxel median over the 3x3x3 neighborhood, replicate padding.
Cube median3(const Cube& y);

/// Local Wiener filter over the 3x3x3 neighborhood: shrinks toward the
/// local mean where the local variance falls below sigma^2.
Cube wiener3(const Cube& y, double sigma);

/// Robust noise estimate: scaled median absolute deviation of the
/// axis-1 first differences (spatially constant regions dominate).
double estimate_noise_mad(const Cube& y);

/// Least squares min |Y - W H|_F with H >= 0, solved per column by
/// projected gradient from a clipped ridge start.
Mat nnls_pg(const Mat& w, const Mat& y, int steps);

/// Multiplicative-update NMF. M must be elementwise nonnegative.
/// Objective 1/2 |M - WH|_F^2 is non-increasing up to the epsilon guard;
/// pass `objectives` to record it per iteration.
FactorPair lee_seung(const Mat& m, int k, int iters, std::uint64_t seed,
                     std::vector<double>* objectives = nullptr);

struct SpaResult {
    std::vector<int> indices;  // selected pure-pixel columns of M
    Mat w;                     // the corresponding original columns
    bool complete = true;      // false when norms underflowed before k picks
};

/// Successive Projection Algorithm: greedy max-norm column selection with
/// orthogonal projection. Columns of M are pixel spectra.
SpaResult spa(const Mat& m, int k);

/// Four-block ADMM splitting for plain NMF (ridge solves + positive
/// projections). Returns the projected factors W = Z1, H = X2.
FactorPair admm_nmf(const Mat& m, int k, const AdmmConfig& cfg,
                    SolveDiagnostics* diag = nullptr);

}  // namespace hyptv
