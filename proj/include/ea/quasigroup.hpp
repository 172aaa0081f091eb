#pragma once

#include <string>
#include <vector>

#include "ea/model.hpp"

namespace ea {

/// x o_eps y: the dilation of y based at x, guarded by the model's locality radius.
Point dilate(const DilationModel& m, const ScaleElement& eps, const Point& base, const Point& y);

/// x •_eps y = x o_{eps^-1} y, the left division. Guarded on the input distance only;
/// the result may legitimately leave the locality ball.
Point undilate(const DilationModel& m, const ScaleElement& eps, const Point& base, const Point& y);

/// Approximate sum  Sigma^x_eps(u, v) = x •_eps ((x o_eps u) o_eps v).
Point approx_sum(const DilationModel& m, const ScaleElement& eps, const Point& x, const Point& u,
                 const Point& v);

/// Approximate difference  Delta^x_eps(u, v) = (x o_eps u) •_eps (x o_eps v).
Point approx_diff(const DilationModel& m, const ScaleElement& eps, const Point& x, const Point& u,
                  const Point& v);

/// Approximate inverse  inv^x_eps(u) = (x o_eps u) •_eps x.
Point approx_inverse(const DilationModel& m, const ScaleElement& eps, const Point& x,
                     const Point& u);

/// The two-dilation tangent-sum construction: first move far, A = x •_eps z, then
/// contract toward y, B = y o_eps A. Deliberately unguarded; the far intermediate is the
/// point of the construction. Throws LocalityError("non-local intermediate ...") when the
/// intermediate overflows.
Point blue_construction(const DilationModel& m, const ScaleElement& eps, const Point& x,
                        const Point& y, const Point& z);

/// Result of a sampled law check. Violations are reported, never thrown.
struct CheckReport {
    std::string check;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// x o_eps x = x over the sample.
CheckReport check_idempotent(const DilationModel& m, const ScaleElement& eps,
                             const std::vector<Point>& sample, double tol);

/// x o_1 y = y over consecutive sample pairs.
CheckReport check_trivial_at_neutral(const DilationModel& m, const std::vector<Point>& sample,
                                     double tol);

/// x o_eps (x o_mu y) = x o_{eps mu} y over consecutive sample pairs.
CheckReport check_one_parameter_law(const DilationModel& m, const ScaleElement& eps,
                                    const ScaleElement& mu, const std::vector<Point>& sample,
                                    double tol);

/// x o_eps (y o_eps z) = (x o_eps y) o_eps (x o_eps z) over consecutive sample triples.
CheckReport check_self_distributivity(const DilationModel& m, const ScaleElement& eps,
                                      const std::vector<Point>& sample, double tol);

/// Both quasigroup round trips, bullet(op) and op(bullet), over consecutive pairs.
CheckReport check_left_division(const DilationModel& m, const ScaleElement& eps,
                                const std::vector<Point>& sample, double tol);

}  // namespace ea
