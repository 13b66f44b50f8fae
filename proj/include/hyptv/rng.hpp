#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hyptv {

/// mt19937_64 wrapper with hand-rolled output mappings, so streams do not
/// depend on the standard library's unspecified distribution algorithms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (no cached spare).
    double normal() {
        const double u1 = 1.0 - u01();  // (0, 1], keeps log finite
        const double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
    }

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * bound) >> 64);
    }

  private:
    std::mt19937_64 engine_;
    static constexpr double pi_ = 3.141592653589793238462643383279502884;
};

}  // namespace hyptv
