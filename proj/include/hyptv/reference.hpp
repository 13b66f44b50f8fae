#pragma once

#include "hyptv/tensor.hpp"
#include "hyptv/transforms.hpp"

namespace hyptv::ref {

// Straightforward serial implementations of the data-parallel kernels.
// They are the comparison baseline for the OpenMP/FFTW paths: unit tests
// assert agreement, tools/bench measures the gap. Everything here favors
// being obviously correct over being fast.

/// Materialized DCT-II matrix, entries cos(i (j+1/2) pi / n).
Mat dct2_matrix(int n);

/// Materialized inverse (DCT-III convention): dct3_matrix(n) * dct2_matrix(n) = I.
Mat dct3_matrix(int n);

/// Axis transforms via the materialized matrices, one fiber at a time.
Cube dct2_axis(const Cube& t, int axis);
Cube dct3_axis(const Cube& t, int axis);

/// Mode-k contraction by the naive quadruple loop.
Cube contract_naive(const Cube& t, int mode, const Mat& a);

Cube diff_apply(const Cube& t, int axis);
Cube diff_adjoint(const Cube& t, int axis);

Cube soft_threshold(const Cube& t, double tau);

/// Sylvester solve through the serial transforms.
Cube solve_sylvester(const Cube& b, const SylvesterWeights& w);

/// Per-voxel 3x3x3 median / Wiener with replicate padding, full sort.
Cube median3(const Cube& y);
Cube wiener3(const Cube& y, double sigma);

}  // namespace hyptv::ref
