#include "ea/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ea/errors.hpp"

namespace ea {

namespace {

constexpr double kAntipodalMargin = 1e-6;

void require_dim(const Point& p, int dim, const char* what) {
    if (p.size() != dim) {
        std::ostringstream os;
        os << what << ": carrier mismatch, expected dimension " << dim << ", got " << p.size();
        throw DomainError(os.str());
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// DilationModel base
// ---------------------------------------------------------------------------

double DilationModel::distance(const Point& p, const Point& q) const {
    validate_point(p);
    validate_point(q);
    return (p - q).norm();
}

void DilationModel::validate_point(const Point& p) const { require_dim(p, dim_, id_.c_str()); }

Point DilationModel::sample_point(Sampler& rng, const Point& center, double radius) const {
    validate_point(center);
    return center + rng.ball(dim_, radius);
}

Point DilationModel::origin() const { return Point::Zero(dim_); }

void DilationModel::require_scale(const ScaleElement& eps) const {
    if (eps.variant() != variant_)
        throw ScaleMismatchError(id_ + ": expected " + to_string(variant_) + " scale, got " +
                                 to_string(eps.variant()));
}

// ---------------------------------------------------------------------------
// Heisenberg helpers
// ---------------------------------------------------------------------------

Point heisenberg_mul(const Point& p, const Point& q) {
    require_dim(p, 3, "heisenberg_mul");
    require_dim(q, 3, "heisenberg_mul");
    Point r(3);
    r[0] = p[0] + q[0];
    r[1] = p[1] + q[1];
    r[2] = p[2] + q[2] + 0.5 * (p[0] * q[1] - q[0] * p[1]);
    return r;
}

Point heisenberg_inverse(const Point& p) {
    require_dim(p, 3, "heisenberg_inverse");
    return -p;
}

Point heisenberg_dilate(double eps, const Point& p) {
    require_dim(p, 3, "heisenberg_dilate");
    Point r(3);
    r[0] = eps * p[0];
    r[1] = eps * p[1];
    r[2] = eps * eps * p[2];
    return r;
}

Point carnot_dilate(const ScaleElement& eps, const Point& p) {
    if (eps.variant() != ScaleVariant::positive_real)
        throw ScaleMismatchError("carnot_dilate: expected positive-real scale");
    return heisenberg_dilate(eps.real(), p);
}

double heisenberg_gauge(const Point& p) {
    require_dim(p, 3, "heisenberg_gauge");
    const double horizontal = p[0] * p[0] + p[1] * p[1];
    return std::pow(horizontal * horizontal + p[2] * p[2], 0.25);
}

// ---------------------------------------------------------------------------
// Sphere helpers
// ---------------------------------------------------------------------------

Point sphere_exp(const Point& x, const Point& tangent) {
    require_dim(x, 3, "sphere_exp");
    require_dim(tangent, 3, "sphere_exp");
    const Point v = tangent - tangent.dot(x) * x;
    const double theta = v.norm();
    if (theta < 1e-300) return x;
    Point r = std::cos(theta) * x + (std::sin(theta) / theta) * v;
    return r / r.norm();
}

Point sphere_log(const Point& x, const Point& y) {
    require_dim(x, 3, "sphere_log");
    require_dim(y, 3, "sphere_log");
    const Point perp = y - y.dot(x) * x;
    const double s = perp.norm();
    const double theta = std::atan2(s, y.dot(x));
    if (theta >= std::numbers::pi - kAntipodalMargin)
        throw DomainError("sphere_log: antipodal pair, logarithm undefined");
    if (s < 1e-300) return Point::Zero(3);
    return (theta / s) * perp;
}

double sphere_angle(const Point& x, const Point& y) {
    require_dim(x, 3, "sphere_angle");
    require_dim(y, 3, "sphere_angle");
    const Eigen::Vector3d a = x;
    const Eigen::Vector3d b = y;
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

// ---------------------------------------------------------------------------
// RealVectorModel
// ---------------------------------------------------------------------------

RealVectorModel::RealVectorModel(int dim, double locality_radius)
    : DilationModel("real-vector", dim, ScaleVariant::positive_real, locality_radius) {
    if (dim < 1) throw ConfigError("real-vector: dim must be >= 1");
}

Point RealVectorModel::dilate_raw(const ScaleElement& eps, const Point& base,
                                  const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    return base + eps.real() * (y - base);
}

std::string RealVectorModel::summary() const {
    return "real vector space with affine dilations x + eps*(y - x)";
}

// ---------------------------------------------------------------------------
// ComplexVectorModel
// ---------------------------------------------------------------------------

ComplexVectorModel::ComplexVectorModel(int complex_dim, double locality_radius)
    : DilationModel("complex-vector", 2 * complex_dim, ScaleVariant::nonzero_complex,
                    locality_radius) {
    if (complex_dim < 1) throw ConfigError("complex-vector: dim must be >= 1");
}

Point ComplexVectorModel::dilate_raw(const ScaleElement& eps, const Point& base,
                                     const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    const std::complex<double> e = eps.complex_value();
    Eigen::VectorXcd zx = to_complex(base);
    Eigen::VectorXcd zy = to_complex(y);
    return from_complex((zx + e * (zy - zx)).eval());
}

std::string ComplexVectorModel::summary() const {
    return "complex vector space with complex-scale affine dilations";
}

// ---------------------------------------------------------------------------
// PhiDeformationModel and its two instances
// ---------------------------------------------------------------------------

PhiDeformationModel::PhiDeformationModel(std::string id, int dim, double locality_radius,
                                         int orientation)
    : DilationModel(std::move(id), dim, ScaleVariant::integer_shift, locality_radius),
      orientation_(orientation) {
    if (orientation != 1 && orientation != -1)
        throw ConfigError(this->id() + ": orientation must be +1 or -1");
}

Point PhiDeformationModel::dilate_raw(const ScaleElement& eps, const Point& base,
                                      const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    return base + phi_power(orientation_ * eps.integer(), (y - base).eval());
}

ContractibleLinearModel::ContractibleLinearModel(Eigen::MatrixXd map, int orientation,
                                                 double locality_radius)
    : PhiDeformationModel("contractible-linear", static_cast<int>(map.rows()), locality_radius,
                          orientation),
      map_(std::move(map)) {
    if (map_.rows() != map_.cols() || map_.rows() < 1)
        throw ConfigError("contractible-linear: matrix must be square and nonempty");
    const double det = map_.determinant();
    if (std::abs(det) <= 1e-12)
        throw ConfigError("contractible-linear: matrix is not invertible");
    inverse_map_ = map_.inverse();
}

Point ContractibleLinearModel::phi_power(long long n, const Point& v) const {
    validate_point(v);
    Point out = v;
    const Eigen::MatrixXd& step = n >= 0 ? map_ : inverse_map_;
    for (long long k = 0; k < std::llabs(n); ++k) out = step * out;
    return out;
}

std::string ContractibleLinearModel::summary() const {
    return "additive group R^d deformed by an invertible linear map, integer scale";
}

NonMorphismModel::NonMorphismModel(int orientation, double locality_radius)
    : PhiDeformationModel("non-morphism", 2, locality_radius, orientation) {}

Point NonMorphismModel::phi_power(long long n, const Point& v) const {
    validate_point(v);
    Point w = v;
    if (n >= 0) {
        for (long long k = 0; k < n; ++k) {
            const double a = w[0], b = w[1];
            w[0] = 0.5 * a;
            w[1] = 0.25 * b + 0.25 * a * a;
        }
    } else {
        for (long long k = 0; k < -n; ++k) {
            const double a = w[0], b = w[1];
            w[0] = 2.0 * a;
            w[1] = 4.0 * (b - a * a);
        }
    }
    return w;
}

std::string NonMorphismModel::summary() const {
    return "additive plane deformed by an invertible non-additive triangular map, integer scale";
}

// ---------------------------------------------------------------------------
// CarnotHeisenbergModel
// ---------------------------------------------------------------------------

CarnotHeisenbergModel::CarnotHeisenbergModel(double locality_radius)
    : DilationModel("heisenberg-carnot", 3, ScaleVariant::positive_real, locality_radius) {}

Point CarnotHeisenbergModel::dilate_raw(const ScaleElement& eps, const Point& base,
                                        const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    return heisenberg_mul(base, heisenberg_dilate(eps.real(), heisenberg_mul(-base, y)));
}

double CarnotHeisenbergModel::distance(const Point& p, const Point& q) const {
    validate_point(p);
    validate_point(q);
    return heisenberg_gauge(heisenberg_mul(-p, q));
}

Point CarnotHeisenbergModel::sample_point(Sampler& rng, const Point& center,
                                          double radius) const {
    validate_point(center);
    return heisenberg_mul(center, rng.ball(3, radius));
}

std::string CarnotHeisenbergModel::summary() const {
    return "Heisenberg group with anisotropic Carnot dilations";
}

// ---------------------------------------------------------------------------
// LieExpLogModel
// ---------------------------------------------------------------------------

LieExpLogModel::LieExpLogModel(double locality_radius)
    : DilationModel("lie-exp-log", 3, ScaleVariant::positive_real, locality_radius) {}

Point LieExpLogModel::dilate_raw(const ScaleElement& eps, const Point& base,
                                 const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    // exp and log are identities on exponential coordinates, so eps . log(x^-1 y)
    // scales all three coordinates uniformly.
    return heisenberg_mul(base, (eps.real() * heisenberg_mul(-base, y)).eval());
}

double LieExpLogModel::distance(const Point& p, const Point& q) const {
    validate_point(p);
    validate_point(q);
    return heisenberg_mul(-p, q).norm();
}

Point LieExpLogModel::sample_point(Sampler& rng, const Point& center, double radius) const {
    validate_point(center);
    return heisenberg_mul(center, rng.ball(3, radius));
}

std::string LieExpLogModel::summary() const {
    return "Heisenberg carrier with uniform exp/log scaling dilations";
}

// ---------------------------------------------------------------------------
// SphereModel
// ---------------------------------------------------------------------------

SphereModel::SphereModel()
    : DilationModel("sphere", 3, ScaleVariant::positive_real,
                    std::numbers::pi - kAntipodalMargin) {}

Point SphereModel::dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const {
    require_scale(eps);
    validate_point(base);
    validate_point(y);
    return sphere_exp(base, (eps.real() * sphere_log(base, y)).eval());
}

double SphereModel::distance(const Point& p, const Point& q) const {
    validate_point(p);
    validate_point(q);
    return sphere_angle(p, q);
}

void SphereModel::validate_point(const Point& p) const {
    require_dim(p, 3, "sphere");
    if (std::abs(p.norm() - 1.0) > 1e-12)
        throw DomainError("sphere: point is not unit-norm");
}

Point SphereModel::sample_point(Sampler& rng, const Point& center, double radius) const {
    validate_point(center);
    if (radius >= std::numbers::pi - kAntipodalMargin)
        throw DomainError("sphere: antipodal sample radius");
    // Orthonormal tangent basis at center.
    const Eigen::Vector3d x = center;
    const Eigen::Vector3d seed = std::abs(x[0]) < 0.9 ? Eigen::Vector3d::UnitX()
                                                      : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d t1 = (seed - seed.dot(x) * x).normalized();
    const Eigen::Vector3d t2 = x.cross(t1);
    const Eigen::VectorXd disc = rng.ball(2, radius);
    return sphere_exp(center, (disc[0] * t1 + disc[1] * t2).eval());
}

Point SphereModel::origin() const { return Eigen::Vector3d::UnitZ(); }

std::string SphereModel::summary() const {
    return "unit sphere with great-circle exponential dilations";
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

Point integer_phi_power(const DilationModel& m, long long n, const Point& v) {
    const auto* phi = dynamic_cast<const PhiDeformationModel*>(&m);
    if (phi == nullptr)
        throw DomainError(m.id() + ": integer_phi_power requires an integer-scale phi model");
    return phi->phi_power(n, v);
}

namespace {

Eigen::MatrixXd default_contractible_map() {
    Eigen::MatrixXd a(2, 2);
    a << 0.5, 0.1, 0.0, 0.25;
    return a;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) throw ConfigError("params.matrix: expected array of rows");
    const auto n = rows.size();
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw ConfigError("params.matrix: expected a square array of numbers");
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j].get<double>();
    }
    return a;
}

int param_int(const nlohmann::json& params, const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    if (!params[key].is_number_integer()) throw ConfigError(std::string("params.") + key + ": expected integer");
    return params[key].get<int>();
}

double param_radius(const nlohmann::json& params) {
    if (!params.contains("locality_radius")) return kUnboundedLocality;
    if (!params["locality_radius"].is_number())
        throw ConfigError("params.locality_radius: expected a number");
    const double r = params["locality_radius"].get<double>();
    if (!(r > 0.0)) throw ConfigError("params.locality_radius: must be > 0");
    return r;
}

}  // namespace

std::vector<ModelInfo> list_models() {
    std::vector<ModelInfo> out;
    out.push_back({"complex-vector", ComplexVectorModel(1).summary()});
    out.push_back({"contractible-linear", ContractibleLinearModel(default_contractible_map()).summary()});
    out.push_back({"heisenberg-carnot", CarnotHeisenbergModel().summary()});
    out.push_back({"lie-exp-log", LieExpLogModel().summary()});
    out.push_back({"non-morphism", NonMorphismModel().summary()});
    out.push_back({"real-vector", RealVectorModel(2).summary()});
    out.push_back({"sphere", SphereModel().summary()});
    std::sort(out.begin(), out.end(),
              [](const ModelInfo& a, const ModelInfo& b) { return a.id < b.id; });
    return out;
}

std::unique_ptr<DilationModel> make_model(const std::string& id, const nlohmann::json& params) {
    if (!params.is_object()) throw ConfigError("model params: expected a JSON object");
    const double radius = param_radius(params);
    if (id == "real-vector") {
        return std::make_unique<RealVectorModel>(param_int(params, "dim", 2), radius);
    }
    if (id == "complex-vector") {
        return std::make_unique<ComplexVectorModel>(param_int(params, "dim", 2), radius);
    }
    if (id == "contractible-linear") {
        Eigen::MatrixXd a = params.contains("matrix") ? matrix_from_json(params["matrix"])
                                                      : default_contractible_map();
        return std::make_unique<ContractibleLinearModel>(
            std::move(a), param_int(params, "orientation", -1), radius);
    }
    if (id == "non-morphism") {
        return std::make_unique<NonMorphismModel>(param_int(params, "orientation", -1), radius);
    }
    if (id == "heisenberg-carnot") return std::make_unique<CarnotHeisenbergModel>(radius);
    if (id == "lie-exp-log") return std::make_unique<LieExpLogModel>(radius);
    if (id == "sphere") return std::make_unique<SphereModel>();
    throw ConfigError("model: unknown identifier '" + id + "'");
}

QuandleReport quandle_view_check(const DilationModel& m, const std::vector<ScaleElement>& scales,
                                 const std::vector<Point>& sample, double tol) {
    QuandleReport report;
    for (const ScaleElement& eps : scales) {
        report.details.push_back(check_idempotent(m, eps, sample, tol));
        report.details.push_back(check_left_division(m, eps, sample, tol));
        report.details.push_back(check_self_distributivity(m, eps, sample, tol));
    }
    report.max_residual = 0.0;
    report.quandle_family = true;
    for (const CheckReport& r : report.details) {
        report.max_residual = std::max(report.max_residual, r.max_residual);
        report.quandle_family = report.quandle_family && r.pass;
    }
    return report;
}

}  // namespace ea
