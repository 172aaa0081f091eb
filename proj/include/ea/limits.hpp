#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ea/groupoid.hpp"
#include "ea/quasigroup.hpp"

namespace ea {

/// The expressions whose scale limits the engine evaluates.
enum class ApproxExpr {
    sum,        // Sigma^x_eps(u, v)
    diff,       // Delta^x_eps(u, v)
    inverse,    // inv^x_eps(u)
    dif_target, // target of deformed_dif on the arrows (v, x), (u, x), i.e. Delta^x_eps(u, v)
};

ApproxExpr expr_from_string(const std::string& name);
std::string to_string(ApproxExpr expr);

Point eval_expr(const DilationModel& m, ApproxExpr expr, const ScaleElement& eps, const Point& x,
                const Point& u, const Point& v);

/// Samples of an expression along a net toward the absolute, with a first-order
/// extrapolated limit and an empirical remainder rate.
struct ConvergenceReport {
    std::vector<ScaleElement> net;
    std::vector<Point> values;
    Point extrapolated_limit;
    double empirical_rate = 0.0;        // NaN when successive deltas sit at the noise floor
    double max_successive_delta = 0.0;  // over the final 3 net steps
    bool converged = false;             // max_successive_delta <= tol
    bool rate_inconclusive = false;     // measured rate < 0.5
};

ConvergenceReport estimate_limit(const DilationModel& m, ApproxExpr expr, const Point& x,
                                 const Point& u, const Point& v,
                                 const std::vector<ScaleElement>& net, double tol);

/// Two-point first-order extrapolation: exact when f(eps) = L + c*eps.
Point richardson_first_order(double eps1, const Point& f1, double eps2, const Point& f2);

/// Finite stand-in for "uniformly on compact sets": seeded base and argument points.
struct CompactSample {
    std::vector<Point> bases;
    std::vector<Point> args;
    double radius = 0.0;
    std::uint64_t seed = 0;
};

CompactSample make_compact_sample(const DilationModel& m, int n_bases, int n_args, double radius,
                                  std::uint64_t seed);

inline constexpr const char* kFiniteSampleCaveat =
    "uniformity measured on a finite seeded sample; not certified over compact sets";

/// Cauchy-style uniformity surrogate: sup over the sample of |f_eps - f_eps'| for each
/// consecutive net pair; passes when the sup sequence decreases and ends below tol.
struct UniformityReport {
    std::vector<double> sup_deltas;
    bool decreasing_tail = false;  // strictly decreasing over the final 5 steps
    bool tail_below_tol = false;
    bool pass = false;
    std::string caveat = kFiniteSampleCaveat;
};

UniformityReport uniformity_probe(const DilationModel& m, ApproxExpr expr,
                                  const CompactSample& sample,
                                  const std::vector<ScaleElement>& net, double tol);

/// Finds the first net index N with d(x, x o_eps u) < radius for every base x, argument
/// u, and net index >= N.
struct ContractivityReport {
    std::vector<double> sup_distance;
    int tail_index = -1;
    bool found = false;
};

ContractivityReport compact_contractivity_check(const DilationModel& m,
                                                const CompactSample& sample, double radius,
                                                const std::vector<ScaleElement>& net);

/// Verification that the extrapolated sum S(u, v) = lim Sigma^x_eps(u, v) behaves as a
/// conical group at base x: neutrality, associativity, inverse, and equivariance of the
/// dilations with respect to S. The associativity flag uses 10x the base tolerance since
/// it composes two extrapolations.
struct ConicalCheckReport {
    double neutrality_residual = 0.0;
    double associativity_residual = 0.0;
    double inverse_residual = 0.0;
    double conicality_residual = 0.0;
    bool neutrality_pass = false;
    bool associativity_pass = false;
    bool inverse_pass = false;
    bool conicality_pass = false;
    double tolerance = 0.0;
    bool inconclusive = false;  // some required limit did not converge

    bool all_pass() const {
        return neutrality_pass && associativity_pass && inverse_pass && conicality_pass;
    }
};

ConicalCheckReport conical_group_check(const DilationModel& m, const Point& x,
                                       const CompactSample& sample,
                                       const std::vector<ScaleElement>& net, double tol);

/// Rescaled-distance probe: evaluates (1/eps) d(x o_eps y, x o_eps z) along the net and
/// extrapolates the tangent distance d^x(y, z). Positive-real metric models only.
ConvergenceReport tangent_distance_check(const DilationModel& m, const Point& x, const Point& y,
                                         const Point& z, const std::vector<ScaleElement>& net,
                                         double tol);

/// A smooth test map on R^n together with its analytic Jacobian.
struct SmoothMap {
    std::string name;
    int dim = 0;  // 0 means any dimension
    std::function<Point(const Point&)> apply;
    std::function<Eigen::MatrixXd(const Point&)> jacobian;
    std::string summary;
};

const std::vector<SmoothMap>& builtin_smooth_maps();
const SmoothMap& smooth_map_by_name(const std::string& name);

/// Difference-quotient differential: extrapolates eps^-1 [f(x + eps u) - f(x)] along the
/// net and compares with the analytic Jacobian-vector product; also measures the
/// homogeneity (lambda = 2) and additivity residuals of the extrapolated differential.
struct DifferentialReport {
    ConvergenceReport quotient;
    Point analytic_jvp;
    double analytic_residual = 0.0;
    double homogeneity_residual = 0.0;
    double additivity_residual = 0.0;
    bool pass = false;
};

DifferentialReport gromov_differential(const SmoothMap& f, const Point& x, const Point& u,
                                       const std::vector<ScaleElement>& net, double tol);

}  // namespace ea
