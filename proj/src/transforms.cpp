#include "hyptv/transforms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <fftw3.h>

namespace hyptv {

namespace {

// FFTW plan creation is not thread-safe; execution on distinct arrays is.
// Plans are cached per (length, kind), created in-place and unaligned so
// the new-array execute interface accepts any buffer.
class PlanCache {
  public:
    fftw_plan get(int n, fftw_r2r_kind kind) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, static_cast<int>(kind));
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<double> scratch(n);
        fftw_plan p = fftw_plan_r2r_1d(n, scratch.data(), scratch.data(), kind,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

  private:
    std::mutex mu_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

// FFTW's REDFT10 is twice the cos(i(j+1/2)pi/n) matrix; REDFT01 composed
// with it gives 2n * identity. Scaling by 1/2 and 1/n restores the paper
// convention and makes the pair an exact inverse.
void dct_axis_inplace(Cube& t, int axis, bool forward) {
    const int len = t.dim(axis);
    if (len == 1) return;  // C_1 = (1)
    const fftw_r2r_kind kind = forward ? FFTW_REDFT10 : FFTW_REDFT01;
    const double scale = forward ? 0.5 : 1.0 / len;
    fftw_plan plan = plan_cache().get(len, kind);

    if (axis == 1) {
        const long fibers = static_cast<long>(t.n) * t.o;
#pragma omp parallel for schedule(static)
        for (long f = 0; f < fibers; ++f) {
            double* p = t.data.data() + static_cast<std::size_t>(f) * t.m;
            fftw_execute_r2r(plan, p, p);
            for (int i = 0; i < t.m; ++i) p[i] *= scale;
        }
        return;
    }

    const long fibers = (axis == 2) ? static_cast<long>(t.m) * t.o
                                    : static_cast<long>(t.m) * t.n;
    const std::size_t stride = (axis == 2) ? static_cast<std::size_t>(t.m)
                                           : static_cast<std::size_t>(t.m) * t.n;
#pragma omp parallel
    {
        std::vector<double> buf(len);
#pragma omp for schedule(static)
        for (long f = 0; f < fibers; ++f) {
            std::size_t base;
            if (axis == 2) {
                const long i = f % t.m, k = f / t.m;
                base = static_cast<std::size_t>(i) +
                       static_cast<std::size_t>(t.m) * t.n * k;
            } else {
                base = static_cast<std::size_t>(f);
            }
            double* p = t.data.data() + base;
            for (int q = 0; q < len; ++q) buf[q] = p[q * stride];
            fftw_execute_r2r(plan, buf.data(), buf.data());
            for (int q = 0; q < len; ++q) p[q * stride] = buf[q] * scale;
        }
    }
}

}  // namespace

NeumannSpectrum neumann_eigs(int n) {
    if (n < 1) throw std::invalid_argument("neumann_eigs: n must be >= 1");
    NeumannSpectrum sp;
    sp.n = n;
    sp.s.resize(n);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) sp.s[i] = 2.0 - 2.0 * std::cos(pi * i / n);
    return sp;
}

Cube dct2_axis(Cube t, int axis) {
    dct_axis_inplace(t, axis, true);
    return t;
}

Cube dct3_axis(Cube t, int axis) {
    dct_axis_inplace(t, axis, false);
    return t;
}

Cube solve_sylvester(const Cube& b, const SylvesterWeights& w) {
    if (!(w.alpha > 0.0) || w.rho < 0.0)
        throw std::invalid_argument("solve_sylvester: singular weight configuration");

    const bool any_active = w.active[0] || w.active[1] || w.active[2];
    if (w.rho == 0.0 || !any_active) {
        Cube x = b;
        if (w.alpha != 1.0)
            for (double& v : x.data) v /= w.alpha;
        return x;
    }

    Cube x = b;
    for (int a = 1; a <= 3; ++a)
        if (w.active[a - 1]) x = dct2_axis(std::move(x), a);

    std::array<std::vector<double>, 3> s;
    for (int a = 0; a < 3; ++a)
        s[a] = w.active[a] ? neumann_eigs(b.dim(a + 1)).s
                           : std::vector<double>(b.dim(a + 1), 0.0);

#pragma omp parallel for schedule(static)
    for (int k = 0; k < x.o; ++k)
        for (int j = 0; j < x.n; ++j) {
            const double sjk = s[1][j] + s[2][k];
            double* p = x.data.data() + x.idx(0, j, k);
            for (int i = 0; i < x.m; ++i)
                p[i] /= w.alpha + w.rho * (s[0][i] + sjk);
        }

    for (int a = 1; a <= 3; ++a)
        if (w.active[a - 1]) x = dct3_axis(std::move(x), a);
    return x;
}

}  // namespace hyptv
