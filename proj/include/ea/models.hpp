#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ea/model.hpp"
#include "ea/quasigroup.hpp"

#include "json.hpp"

namespace ea {

// ---------------------------------------------------------------------------
// Heisenberg helpers (exponential coordinates (a, b, c))
// ---------------------------------------------------------------------------

/// Group law (a,b,c)*(a',b',c') = (a+a', b+b', c+c' + (ab'-a'b)/2).
Point heisenberg_mul(const Point& p, const Point& q);

Point heisenberg_inverse(const Point& p);

/// Carnot dilation (eps a, eps b, eps^2 c) with a raw positive coefficient.
Point heisenberg_dilate(double eps, const Point& p);

/// Carnot dilation with a positive-real scale element.
Point carnot_dilate(const ScaleElement& eps, const Point& p);

/// Homogeneous gauge ((a^2+b^2)^2 + c^2)^(1/4); scales exactly under heisenberg_dilate.
double heisenberg_gauge(const Point& p);

// ---------------------------------------------------------------------------
// Sphere helpers (unit S^2 in R^3)
// ---------------------------------------------------------------------------

/// Great-circle exponential at x; the tangent is projected onto x's tangent plane.
Point sphere_exp(const Point& x, const Point& tangent);

/// Great-circle logarithm; throws DomainError for (near-)antipodal pairs.
Point sphere_log(const Point& x, const Point& y);

/// Geodesic angle between unit vectors.
double sphere_angle(const Point& x, const Point& y);

// ---------------------------------------------------------------------------
// Models
// ---------------------------------------------------------------------------

/// Real vector space, positive-real scale: x o_eps y = x + eps (y - x).
class RealVectorModel final : public DilationModel {
public:
    explicit RealVectorModel(int dim, double locality_radius = kUnboundedLocality);
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const override;
    std::string summary() const override;
};

/// Complex vector space (interleaved re/im coordinates), nonzero-complex scale.
class ComplexVectorModel final : public DilationModel {
public:
    explicit ComplexVectorModel(int complex_dim, double locality_radius = kUnboundedLocality);
    int complex_dim() const noexcept { return dim() / 2; }
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const override;
    std::string summary() const override;
};

/// Integer-scale deformations of the additive group R^d by an invertible self map phi
/// fixing 0: x o_n y = x + phi^(orientation * n)(y - x). The default orientation -1 makes
/// the operation contract along nets toward the absolute -inf.
class PhiDeformationModel : public DilationModel {
public:
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const final;

    /// n-fold composition of phi (negative n uses the exact inverse map).
    virtual Point phi_power(long long n, const Point& v) const = 0;

    int net_orientation() const noexcept { return orientation_; }

protected:
    PhiDeformationModel(std::string id, int dim, double locality_radius, int orientation);

private:
    int orientation_;
};

/// phi(v) = A v with an invertible matrix A; a group morphism of (R^d, +).
class ContractibleLinearModel final : public PhiDeformationModel {
public:
    explicit ContractibleLinearModel(Eigen::MatrixXd map, int orientation = -1,
                                     double locality_radius = kUnboundedLocality);
    const Eigen::MatrixXd& map() const noexcept { return map_; }
    Point phi_power(long long n, const Point& v) const override;
    std::string summary() const override;

private:
    Eigen::MatrixXd map_;
    Eigen::MatrixXd inverse_map_;
};

/// phi(v1, v2) = (v1/2, v2/4 + v1^2/4): invertible, fixes 0, not additive, and not
/// self-distributive as a dilation family (unlike a morphism-driven deformation).
class NonMorphismModel final : public PhiDeformationModel {
public:
    explicit NonMorphismModel(int orientation = -1,
                              double locality_radius = kUnboundedLocality);
    Point phi_power(long long n, const Point& v) const override;
    std::string summary() const override;
};

/// Heisenberg group with Carnot dilations: x o_eps y = x * delta_eps(x^-1 y),
/// delta_eps(a,b,c) = (eps a, eps b, eps^2 c). Distance is the homogeneous gauge.
class CarnotHeisenbergModel final : public DilationModel {
public:
    explicit CarnotHeisenbergModel(double locality_radius = kUnboundedLocality);
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const override;
    double distance(const Point& p, const Point& q) const override;
    Point sample_point(Sampler& rng, const Point& center, double radius) const override;
    std::string summary() const override;
};

/// Heisenberg carrier with uniform exp/log scaling: x o_eps y = x * (eps . log(x^-1 y)),
/// where exp/log are identities on exponential coordinates. Distance |log(x^-1 y)|_2.
class LieExpLogModel final : public DilationModel {
public:
    explicit LieExpLogModel(double locality_radius = kUnboundedLocality);
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const override;
    double distance(const Point& p, const Point& q) const override;
    Point sample_point(Sampler& rng, const Point& center, double radius) const override;
    std::string summary() const override;
};

/// Unit sphere with great-circle dilations: x o_eps y = exp_x(eps log_x y).
class SphereModel final : public DilationModel {
public:
    SphereModel();
    Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const override;
    double distance(const Point& p, const Point& q) const override;
    void validate_point(const Point& p) const override;
    Point sample_point(Sampler& rng, const Point& center, double radius) const override;
    Point origin() const override;
    std::string summary() const override;
};

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

/// phi^n applied through a PhiDeformationModel; throws DomainError for other models.
Point integer_phi_power(const DilationModel& m, long long n, const Point& v);

struct ModelInfo {
    std::string id;
    std::string summary;
};

/// Alphabetical, stable listing of the implemented models.
std::vector<ModelInfo> list_models();

/// Construct a model from an identifier and a parameter block, e.g.
///   make_model("real-vector", {{"dim", 3}})
///   make_model("contractible-linear", {{"matrix", {{0.5, 0.1}, {0.0, 0.25}}}})
/// Throws ConfigError for unknown identifiers or malformed parameters.
std::unique_ptr<DilationModel> make_model(const std::string& id,
                                          const nlohmann::json& params = nlohmann::json::object());

/// Simultaneous idempotency + left-division + self-distributivity classification at each
/// sampled scale: the model is a one-parameter quandle family iff all three hold.
struct QuandleReport {
    bool quandle_family = false;
    double max_residual = 0.0;
    std::vector<CheckReport> details;
};

QuandleReport quandle_view_check(const DilationModel& m, const std::vector<ScaleElement>& scales,
                                 const std::vector<Point>& sample, double tol);

}  // namespace ea
