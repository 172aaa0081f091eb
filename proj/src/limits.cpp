#include "ea/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ea/errors.hpp"

namespace ea {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double median(std::vector<double> v) {
    if (v.empty()) return kNan;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Complex two-point first-order extrapolation for interleaved complex values.
Point richardson_complex(const std::complex<double>& e1, const Point& f1,
                         const std::complex<double>& e2, const Point& f2) {
    const Eigen::VectorXcd z1 = to_complex(f1);
    const Eigen::VectorXcd z2 = to_complex(f2);
    const std::complex<double> denom = e1 - e2;
    return from_complex(((e1 * z2 - e2 * z1) / denom).eval());
}

/// Per-component Aitken delta-squared on the last three values; exact for remainders
/// that are geometric per component, which covers the integer-scale phi models.
Point aitken(const Point& f0, const Point& f1, const Point& f2) {
    Point out(f2.size());
    for (Eigen::Index i = 0; i < f2.size(); ++i) {
        const double denom = f2[i] - 2.0 * f1[i] + f0[i];
        const double scale = std::max({std::abs(f0[i]), std::abs(f1[i]), std::abs(f2[i]), 1.0});
        if (std::abs(denom) < 1e-14 * scale) {
            out[i] = f2[i];
        } else {
            const double d = f2[i] - f1[i];
            out[i] = f2[i] - d * d / denom;
        }
    }
    return out;
}

Point extrapolate(ScaleVariant variant, const std::vector<ScaleElement>& net,
                  const std::vector<Point>& values) {
    const std::size_t n = values.size();
    if (n < 2) return values.back();
    switch (variant) {
        case ScaleVariant::positive_real:
            return richardson_first_order(net[n - 2].real(), values[n - 2], net[n - 1].real(),
                                          values[n - 1]);
        case ScaleVariant::nonzero_complex:
            return richardson_complex(net[n - 2].complex_value(), values[n - 2],
                                      net[n - 1].complex_value(), values[n - 1]);
        case ScaleVariant::integer_shift:
            if (n < 3) return values.back();
            return aitken(values[n - 3], values[n - 2], values[n - 1]);
    }
    return values.back();
}

ConvergenceReport summarize(ScaleVariant variant, std::vector<ScaleElement> net,
                            std::vector<Point> values, double tol) {
    ConvergenceReport report;
    report.net = std::move(net);
    report.values = std::move(values);

    bool finite = true;
    for (const Point& v : report.values) finite = finite && v.allFinite();

    report.extrapolated_limit =
        finite ? extrapolate(variant, report.net, report.values) : report.values.back();

    const std::size_t n = report.values.size();
    report.max_successive_delta = 0.0;
    const std::size_t first_delta = n > 3 ? n - 4 : 0;
    for (std::size_t k = first_delta; k + 1 < n; ++k)
        report.max_successive_delta = std::max(
            report.max_successive_delta, inf_distance(report.values[k + 1], report.values[k]));
    report.converged = finite && report.max_successive_delta <= tol;

    // Empirical remainder rate from distances to the extrapolated limit, over the tail,
    // skipping pairs at the floating-point noise floor.
    report.empirical_rate = kNan;
    report.rate_inconclusive = false;
    if (finite) {
        const double noise =
            1e-13 * (1.0 + report.extrapolated_limit.lpNorm<Eigen::Infinity>());
        std::vector<double> rates;
        const std::size_t tail_start = n > 7 ? n - 7 : 0;
        for (std::size_t k = tail_start; k + 1 < n; ++k) {
            const double d0 = inf_distance(report.values[k], report.extrapolated_limit);
            const double d1 = inf_distance(report.values[k + 1], report.extrapolated_limit);
            if (d0 > noise && d1 > noise) rates.push_back(std::log2(d0 / d1));
        }
        report.empirical_rate = median(std::move(rates));
        // A slow measured rate only matters while the sequence has not yet settled;
        // once the tail deltas are inside tol the remaining motion is roundoff.
        report.rate_inconclusive = !report.converged && !std::isnan(report.empirical_rate) &&
                                   report.empirical_rate < 0.5;
    } else {
        report.converged = false;
    }
    return report;
}

}  // namespace

ApproxExpr expr_from_string(const std::string& name) {
    if (name == "sum") return ApproxExpr::sum;
    if (name == "diff") return ApproxExpr::diff;
    if (name == "inv" || name == "inverse") return ApproxExpr::inverse;
    if (name == "dif-target") return ApproxExpr::dif_target;
    throw ConfigError("expr: unknown expression '" + name + "'");
}

std::string to_string(ApproxExpr expr) {
    switch (expr) {
        case ApproxExpr::sum: return "sum";
        case ApproxExpr::diff: return "diff";
        case ApproxExpr::inverse: return "inv";
        case ApproxExpr::dif_target: return "dif-target";
    }
    return "?";
}

Point eval_expr(const DilationModel& m, ApproxExpr expr, const ScaleElement& eps, const Point& x,
                const Point& u, const Point& v) {
    switch (expr) {
        case ApproxExpr::sum: return approx_sum(m, eps, x, u, v);
        case ApproxExpr::diff: return approx_diff(m, eps, x, u, v);
        case ApproxExpr::inverse: return approx_inverse(m, eps, x, u);
        case ApproxExpr::dif_target: return deformed_dif(m, eps, Arrow{v, x}, Arrow{u, x}).target;
    }
    throw DomainError("unknown expression");
}

ConvergenceReport estimate_limit(const DilationModel& m, ApproxExpr expr, const Point& x,
                                 const Point& u, const Point& v,
                                 const std::vector<ScaleElement>& net, double tol) {
    if (net.size() < 2) throw DomainError("estimate_limit: net must have at least 2 points");
    std::vector<Point> values;
    values.reserve(net.size());
    for (const ScaleElement& eps : net) values.push_back(eval_expr(m, expr, eps, x, u, v));
    return summarize(m.scale_variant(), net, std::move(values), tol);
}

Point richardson_first_order(double eps1, const Point& f1, double eps2, const Point& f2) {
    return (eps1 * f2 - eps2 * f1) / (eps1 - eps2);
}

CompactSample make_compact_sample(const DilationModel& m, int n_bases, int n_args, double radius,
                                  std::uint64_t seed) {
    CompactSample sample;
    sample.radius = radius;
    sample.seed = seed;
    Sampler rng(seed);
    const Point center = m.origin();
    for (int i = 0; i < n_bases; ++i)
        sample.bases.push_back(m.sample_point(rng, center, 0.4 * radius));
    for (int i = 0; i < n_args; ++i)
        sample.args.push_back(m.sample_point(rng, center, 0.6 * radius));
    return sample;
}

UniformityReport uniformity_probe(const DilationModel& m, ApproxExpr expr,
                                  const CompactSample& sample,
                                  const std::vector<ScaleElement>& net, double tol) {
    UniformityReport report;
    if (sample.bases.empty() || sample.args.empty())
        throw DomainError("uniformity_probe: empty sample");
    const std::size_t n_args = sample.args.size();

    std::vector<std::vector<Point>> per_eps(net.size());
    for (std::size_t k = 0; k < net.size(); ++k) {
        for (const Point& x : sample.bases) {
            for (std::size_t i = 0; i < n_args; ++i) {
                const Point& u = sample.args[i];
                const Point& v = sample.args[(i + 1) % n_args];
                per_eps[k].push_back(eval_expr(m, expr, net[k], x, u, v));
            }
        }
    }

    report.sup_deltas.resize(net.size() - 1, 0.0);
    for (std::size_t k = 0; k + 1 < net.size(); ++k) {
        double sup = 0.0;
        for (std::size_t j = 0; j < per_eps[k].size(); ++j)
            sup = std::max(sup, inf_distance(per_eps[k][j], per_eps[k + 1][j]));
        report.sup_deltas[k] = sup;
    }

    const std::size_t n = report.sup_deltas.size();
    const std::size_t tail = std::min<std::size_t>(5, n);
    report.decreasing_tail = true;
    for (std::size_t k = n - tail; k + 1 < n; ++k)
        report.decreasing_tail = report.decreasing_tail &&
                                 (report.sup_deltas[k] > report.sup_deltas[k + 1]);
    report.tail_below_tol = report.sup_deltas.back() <= tol;
    report.pass = report.decreasing_tail && report.tail_below_tol;
    return report;
}

ContractivityReport compact_contractivity_check(const DilationModel& m,
                                                const CompactSample& sample, double radius,
                                                const std::vector<ScaleElement>& net) {
    ContractivityReport report;
    report.sup_distance.reserve(net.size());
    for (const ScaleElement& eps : net) {
        double sup = 0.0;
        for (const Point& x : sample.bases)
            for (const Point& u : sample.args)
                sup = std::max(sup, m.distance(x, m.dilate_raw(eps, x, u)));
        report.sup_distance.push_back(sup);
    }
    report.tail_index = -1;
    for (int k = static_cast<int>(net.size()) - 1; k >= 0; --k) {
        if (report.sup_distance[static_cast<std::size_t>(k)] < radius)
            report.tail_index = k;
        else
            break;
    }
    report.found = report.tail_index >= 0;
    return report;
}

ConicalCheckReport conical_group_check(const DilationModel& m, const Point& x,
                                       const CompactSample& sample,
                                       const std::vector<ScaleElement>& net, double tol) {
    ConicalCheckReport report;
    report.tolerance = tol;
    if (sample.args.size() < 3) throw DomainError("conical_group_check: need >= 3 argument points");

    // Convergence of the limits themselves is gated separately from the law residuals;
    // tail deltas of a first-order remainder sit near eps_min, well under 1e-5.
    const double converge_tol = 1e-5;
    bool inconclusive = false;

    auto limit_of = [&](ApproxExpr expr, const Point& u, const Point& v) {
        ConvergenceReport r = estimate_limit(m, expr, x, u, v, net, converge_tol);
        inconclusive = inconclusive || !r.converged || r.rate_inconclusive;
        return r.extrapolated_limit;
    };
    auto S = [&](const Point& u, const Point& v) { return limit_of(ApproxExpr::sum, u, v); };

    const std::size_t n_args = std::min<std::size_t>(sample.args.size(), 6);

    for (std::size_t i = 0; i < n_args; ++i) {
        const Point& a = sample.args[i];
        report.neutrality_residual =
            std::max({report.neutrality_residual, inf_distance(S(x, a), a),
                      inf_distance(S(a, x), a)});
    }

    for (std::size_t i = 0; i + 2 < n_args; ++i) {
        const Point& a = sample.args[i];
        const Point& b = sample.args[i + 1];
        const Point& c = sample.args[i + 2];
        const Point left = S(S(a, b), c);
        const Point right = S(a, S(b, c));
        report.associativity_residual =
            std::max(report.associativity_residual, inf_distance(left, right));
    }

    for (std::size_t i = 0; i < n_args; ++i) {
        const Point& a = sample.args[i];
        const Point inv_a = limit_of(ApproxExpr::inverse, a, a);
        report.inverse_residual = std::max(report.inverse_residual, inf_distance(S(a, inv_a), x));
    }

    const std::size_t n_eps = std::min<std::size_t>(net.size(), 4);
    for (std::size_t i = 0; i + 1 < n_args; ++i) {
        const Point& a = sample.args[i];
        const Point& b = sample.args[i + 1];
        const Point sab = S(a, b);
        for (std::size_t k = 0; k < n_eps; ++k) {
            const Point lhs = dilate(m, net[k], x, sab);
            const Point rhs = S(dilate(m, net[k], x, a), dilate(m, net[k], x, b));
            report.conicality_residual =
                std::max(report.conicality_residual, inf_distance(lhs, rhs));
        }
    }

    report.inconclusive = inconclusive;
    report.neutrality_pass = report.neutrality_residual <= tol;
    report.associativity_pass = report.associativity_residual <= 10.0 * tol;
    report.inverse_pass = report.inverse_residual <= tol;
    report.conicality_pass = report.conicality_residual <= tol;
    return report;
}

ConvergenceReport tangent_distance_check(const DilationModel& m, const Point& x, const Point& y,
                                         const Point& z, const std::vector<ScaleElement>& net,
                                         double tol) {
    if (m.scale_variant() != ScaleVariant::positive_real)
        throw DomainError(m.id() + ": tangent_distance_check requires a positive-real metric model");
    std::vector<Point> values;
    values.reserve(net.size());
    for (const ScaleElement& eps : net) {
        Point q(1);
        q[0] = m.distance(dilate(m, eps, x, y), dilate(m, eps, x, z)) / eps.real();
        values.push_back(q);
    }
    return summarize(ScaleVariant::positive_real, net, std::move(values), tol);
}

const std::vector<SmoothMap>& builtin_smooth_maps() {
    static const std::vector<SmoothMap> maps = [] {
        std::vector<SmoothMap> out;
        out.push_back({"identity", 0,
                       [](const Point& p) { return p; },
                       [](const Point& p) {
                           return Eigen::MatrixXd::Identity(p.size(), p.size()).eval();
                       },
                       "identity map on R^n"});
        out.push_back({"quadratic", 2,
                       [](const Point& p) {
                           Point q(2);
                           q[0] = p[0] * p[0];
                           q[1] = p[1];
                           return q;
                       },
                       [](const Point& p) {
                           Eigen::MatrixXd j(2, 2);
                           j << 2.0 * p[0], 0.0, 0.0, 1.0;
                           return j;
                       },
                       "(p1^2, p2)"});
        out.push_back({"trig-exp", 2,
                       [](const Point& p) {
                           Point q(2);
                           q[0] = std::sin(p[0]) + p[1] * p[1];
                           q[1] = std::exp(p[1]) - p[0];
                           return q;
                       },
                       [](const Point& p) {
                           Eigen::MatrixXd j(2, 2);
                           j << std::cos(p[0]), 2.0 * p[1], -1.0, std::exp(p[1]);
                           return j;
                       },
                       "(sin p1 + p2^2, exp p2 - p1)"});
        return out;
    }();
    return maps;
}

const SmoothMap& smooth_map_by_name(const std::string& name) {
    for (const SmoothMap& m : builtin_smooth_maps())
        if (m.name == name) return m;
    throw ConfigError("map: unknown smooth map '" + name + "'");
}

namespace {

ConvergenceReport quotient_limit(const SmoothMap& f, const Point& x, const Point& u,
                                 const std::vector<ScaleElement>& net, double tol) {
    if (net.size() < 2) throw DomainError("gromov_differential: net must have at least 2 points");
    const Point fx = f.apply(x);
    std::vector<Point> values;
    values.reserve(net.size());
    for (const ScaleElement& eps : net) {
        if (eps.variant() != ScaleVariant::positive_real)
            throw DomainError("gromov_differential: requires a positive-real net");
        const double e = eps.real();
        values.push_back(((f.apply(x + e * u) - fx) / e).eval());
    }
    return summarize(ScaleVariant::positive_real, net, std::move(values), tol);
}

}  // namespace

DifferentialReport gromov_differential(const SmoothMap& f, const Point& x, const Point& u,
                                       const std::vector<ScaleElement>& net, double tol) {
    if (f.dim != 0 && x.size() != f.dim)
        throw DomainError("gromov_differential: point dimension does not match the map");
    DifferentialReport report;
    report.quotient = quotient_limit(f, x, u, net, tol);
    report.analytic_jvp = f.jacobian(x) * u;
    report.analytic_residual =
        inf_distance(report.quotient.extrapolated_limit, report.analytic_jvp);

    const Point d_u = report.quotient.extrapolated_limit;
    const Point d_2u = quotient_limit(f, x, (2.0 * u).eval(), net, tol).extrapolated_limit;
    report.homogeneity_residual = inf_distance(d_2u, (2.0 * d_u).eval());

    Point w(u.size());
    if (u.size() == 2) {
        w << -u[1], u[0];
    } else {
        for (Eigen::Index i = 0; i < u.size(); ++i) w[i] = u[(i + 1) % u.size()];
        w[0] = -w[0];
    }
    const Point d_w = quotient_limit(f, x, w, net, tol).extrapolated_limit;
    const Point d_uw = quotient_limit(f, x, (u + w).eval(), net, tol).extrapolated_limit;
    report.additivity_residual = inf_distance(d_uw, (d_u + d_w).eval());

    report.pass = report.analytic_residual <= tol && report.homogeneity_residual <= tol &&
                  report.additivity_residual <= tol;
    return report;
}

}  // namespace ea
