#include "ea/sampling.hpp"

namespace ea {

Eigen::VectorXd Sampler::ball(int dim, double radius) {
    Eigen::VectorXd v(dim);
    while (true) {
        for (int i = 0; i < dim; ++i) v[i] = range(-1.0, 1.0);
        if (v.squaredNorm() <= 1.0) return radius * v;
    }
}

}  // namespace ea
