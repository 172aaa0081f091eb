#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ea/errors.hpp"

namespace ea {

/// A point of a model's carrier set. Length and constraints are owned by the model;
/// complex carriers store interleaved (re, im) pairs.
using Point = Eigen::VectorXd;

inline double inf_distance(const Point& a, const Point& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
}

/// Interleaved (re, im) coordinates viewed as a complex vector.
inline Eigen::VectorXcd to_complex(const Point& interleaved) {
    if (interleaved.size() % 2 != 0)
        throw DomainError("interleaved complex vector must have even length");
    Eigen::VectorXcd z(interleaved.size() / 2);
    for (Eigen::Index k = 0; k < z.size(); ++k)
        z[k] = std::complex<double>(interleaved[2 * k], interleaved[2 * k + 1]);
    return z;
}

inline Point from_complex(const Eigen::VectorXcd& z) {
    Point p(2 * z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) {
        p[2 * k] = z[k].real();
        p[2 * k + 1] = z[k].imag();
    }
    return p;
}

}  // namespace ea
