#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ea/point.hpp"

namespace ea {

/// Deterministic uniform sampling. Raw engine output is mapped to doubles by hand so
/// that identical seeds produce identical streams on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform in the Euclidean ball of the given radius (rejection from the cube).
    Eigen::VectorXd ball(int dim, double radius);

private:
    std::mt19937_64 engine_;
};

}  // namespace ea
