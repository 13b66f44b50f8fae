#pragma once

#include <array>
#include <vector>

#include "hyptv/tensor.hpp"

namespace hyptv {

/// Eigenvalues of the Neumann Laplacian L_n in DCT index order:
/// s[i] = 2 - 2 cos(pi i / n) = 4 sin^2(pi i / 2n), i = 0..n-1.
/// s[0] = 0 (constant mode), s nondecreasing, s[i] <= 4.
struct NeumannSpectrum {
    int n = 0;
    std::vector<double> s;
};

NeumannSpectrum neumann_eigs(int n);

/// Unnormalized DCT-II along one axis, entries cos(i (j+1/2) pi / n).
/// dct3_axis applies the exact inverse (DCT-III scaled by 1/n), so
/// dct3_axis(dct2_axis(t, a), a) == t up to roundoff. Axes of length 1
/// transform to themselves. Backed by FFTW, fibers processed in parallel.
Cube dct2_axis(Cube t, int axis);
Cube dct3_axis(Cube t, int axis);

/// Coefficients of the generalized Sylvester system
///   alpha*X + rho * sum_{a in active} X x_a L_{dim(a)} = B.
/// Requires alpha > 0 and rho >= 0; anything else leaves the constant
/// mode singular or sign-indefinite and is rejected.
struct SylvesterWeights {
    double alpha = 1.0;
    double rho = 1.0;
    std::array<bool, 3> active = {true, true, true};
};

/// Solves the system above in O(mno log(mno)): forward DCT-II over the
/// active axes, pointwise division by alpha + rho*(s_i + s_j + s_k),
/// inverse DCT-III. rho == 0 (or no active axis) short-circuits to B/alpha.
Cube solve_sylvester(const Cube& b, const SylvesterWeights& w);

}  // namespace hyptv
