#pragma once

#include <limits>
#include <memory>
#include <string>

#include "ea/point.hpp"
#include "ea/sampling.hpp"
#include "ea/scale.hpp"

namespace ea {

/// A carrier set with a scale-indexed family of dilations x -> x o_eps y. The central
/// abstraction: every concrete model supplies the raw dilation formula, a distance, and
/// how to draw carrier points. Models are immutable after construction.
class DilationModel {
public:
    virtual ~DilationModel() = default;

    const std::string& id() const noexcept { return id_; }
    int dim() const noexcept { return dim_; }
    ScaleVariant scale_variant() const noexcept { return variant_; }

    /// Radius of the ball around the base point inside which dilation arguments must
    /// lie; +inf means unbounded.
    double locality_radius() const noexcept { return locality_radius_; }

    /// x o_eps y without the locality guard. Callers that must stay local go through
    /// ea::dilate instead.
    virtual Point dilate_raw(const ScaleElement& eps, const Point& base, const Point& y) const = 0;

    /// Carrier distance: Euclidean unless the model overrides (gauge, geodesic angle).
    virtual double distance(const Point& p, const Point& q) const;

    /// Throws DomainError on dimension or carrier-constraint violations.
    virtual void validate_point(const Point& p) const;

    /// Uniform draw from the radius-ball around center, respecting carrier constraints.
    virtual Point sample_point(Sampler& rng, const Point& center, double radius) const;

    /// Canonical base point (the origin, the group identity, the north pole).
    virtual Point origin() const;

    virtual std::string summary() const = 0;

    /// Throws ScaleMismatchError unless eps belongs to this model's scale group.
    void require_scale(const ScaleElement& eps) const;

protected:
    DilationModel(std::string id, int dim, ScaleVariant variant, double locality_radius)
        : id_(std::move(id)), dim_(dim), variant_(variant), locality_radius_(locality_radius) {}

private:
    std::string id_;
    int dim_;
    ScaleVariant variant_;
    double locality_radius_;
};

inline constexpr double kUnboundedLocality = std::numeric_limits<double>::infinity();

}  // namespace ea
