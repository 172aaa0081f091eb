#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ea/models.hpp"

using namespace ea;

namespace {

Point pt3(double a, double b, double c) {
    Point p(3);
    p << a, b, c;
    return p;
}

Point pt2(double a, double b) {
    Point p(2);
    p << a, b;
    return p;
}

std::vector<std::unique_ptr<DilationModel>> all_models() {
    std::vector<std::unique_ptr<DilationModel>> out;
    for (const auto& info : list_models()) out.push_back(make_model(info.id));
    return out;
}

}  // namespace

TEST_CASE("heisenberg group law") {
    CHECK(inf_distance(heisenberg_mul(pt3(1, 0, 0), pt3(0, 1, 0)), pt3(1, 1, 0.5)) == 0.0);
    const Point p = pt3(0.3, -0.7, 0.2);
    CHECK(inf_distance(heisenberg_mul(p, pt3(0, 0, 0)), p) == 0.0);
    CHECK(inf_distance(heisenberg_mul(p, heisenberg_inverse(p)), pt3(0, 0, 0)) <= 1e-15);
    // associativity
    const Point q = pt3(-0.2, 0.5, 0.1), r = pt3(0.9, 0.4, -0.3);
    CHECK(inf_distance(heisenberg_mul(heisenberg_mul(p, q), r),
                       heisenberg_mul(p, heisenberg_mul(q, r))) <= 1e-15);
}

TEST_CASE("carnot dilations") {
    const auto half = ScaleElement::positive_real(0.5);
    CHECK(inf_distance(carnot_dilate(half, pt3(1, 0, 0)), pt3(0.5, 0, 0)) == 0.0);
    CHECK(inf_distance(carnot_dilate(half, pt3(0, 0, 1)), pt3(0, 0, 0.25)) == 0.0);
    const Point p = pt3(0.2, -0.4, 0.7);
    CHECK(inf_distance(carnot_dilate(half, carnot_dilate(half, p)),
                       carnot_dilate(ScaleElement::positive_real(0.25), p)) <= 1e-16);
    CHECK_THROWS_AS(carnot_dilate(ScaleElement::integer_shift(1), pt3(1, 0, 0)),
                    ScaleMismatchError);
}

TEST_CASE("heisenberg gauge scales exactly under carnot dilations") {
    const Point p = pt3(0.3, 0.2, -0.15);
    for (double e : {0.5, 0.25, 0.1})
        CHECK(heisenberg_gauge(heisenberg_dilate(e, p)) ==
              doctest::Approx(e * heisenberg_gauge(p)).epsilon(1e-14));
}

TEST_CASE("sphere exp and log") {
    const Point north = pt3(0, 0, 1);
    const Point east = pt3(1, 0, 0);
    CHECK(sphere_log(north, east).norm() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(sphere_log(north, north).norm() == 0.0);
    const Point mid = sphere_exp(north, (0.5 * sphere_log(north, east)).eval());
    CHECK(inf_distance(mid, pt3(std::sqrt(0.5), 0, std::sqrt(0.5))) <= 1e-12);
    // round trip, and |log| equals the geodesic angle
    const Point y = pt3(0.48, -0.6, 0.640312423743285).normalized();
    CHECK(inf_distance(sphere_exp(north, sphere_log(north, y)), y) <= 1e-9);
    CHECK(sphere_log(north, y).norm() == doctest::Approx(sphere_angle(north, y)).epsilon(1e-12));
    CHECK_THROWS_AS(sphere_log(north, pt3(0, 0, -1)), DomainError);
}

TEST_CASE("integer phi powers") {
    Eigen::MatrixXd a(2, 2);
    a << 0.5, 0.0, 0.0, 0.25;
    ContractibleLinearModel linear(a);
    CHECK(inf_distance(linear.phi_power(1, pt2(4, 8)), pt2(2, 2)) == 0.0);
    CHECK(inf_distance(linear.phi_power(0, pt2(4, 8)), pt2(4, 8)) == 0.0);
    CHECK(inf_distance(linear.phi_power(1, linear.phi_power(-1, pt2(0.3, -0.9))), pt2(0.3, -0.9)) <=
          1e-12);
    CHECK(inf_distance(integer_phi_power(linear, 2, pt2(4, 8)), pt2(1, 0.5)) <= 1e-15);

    NonMorphismModel nm;
    const Point v = pt2(0.7, -0.2);
    CHECK(inf_distance(nm.phi_power(-3, nm.phi_power(3, v)), v) <= 1e-12);
    CHECK(inf_distance(nm.phi_power(1, pt2(0, 0)), pt2(0, 0)) == 0.0);
    // phi is not additive
    const Point u = pt2(0.4, 0.6);
    CHECK(inf_distance(nm.phi_power(1, (u + v).eval()),
                       (nm.phi_power(1, u) + nm.phi_power(1, v)).eval()) > 1e-3);

    RealVectorModel rv(2);
    CHECK_THROWS_AS(integer_phi_power(rv, 1, pt2(1, 1)), DomainError);
}

TEST_CASE("direct dilation formulas") {
    RealVectorModel rv(2);
    CHECK(inf_distance(rv.dilate_raw(ScaleElement::positive_real(0.5), pt2(0, 0), pt2(2, 4)),
                       pt2(1, 2)) == 0.0);

    ComplexVectorModel cv(1);
    // (1 - i) * (i) applied from base 0 to y = i: eps*(y-0) with eps = i gives -1.
    const auto eps = ScaleElement::nonzero_complex({0.0, 1.0});
    const Point y = pt2(0.0, 1.0);
    CHECK(inf_distance(cv.dilate_raw(eps, pt2(0, 0), y), pt2(-1.0, 0.0)) <= 1e-15);
}

TEST_CASE("triviality and idempotency across every model") {
    for (const auto& m : all_models()) {
        Sampler rng(7);
        const Point x = m->sample_point(rng, m->origin(), 0.4);
        const Point y = m->sample_point(rng, m->origin(), 0.4);
        CHECK(inf_distance(m->dilate_raw(neutral(m->scale_variant()), x, y), y) <= 1e-12);
        ScaleElement eps = m->scale_variant() == ScaleVariant::integer_shift
                               ? ScaleElement::integer_shift(-2)
                               : m->scale_variant() == ScaleVariant::nonzero_complex
                                     ? ScaleElement::nonzero_complex({0.4, 0.2})
                                     : ScaleElement::positive_real(0.37);
        CHECK(inf_distance(m->dilate_raw(eps, x, x), x) <= 1e-12);
    }
}

TEST_CASE("carnot dilation at the identity base") {
    CarnotHeisenbergModel carnot;
    const auto eps = ScaleElement::positive_real(0.3);
    const Point y = pt3(0.5, -0.2, 0.4);
    CHECK(inf_distance(carnot.dilate_raw(eps, pt3(0, 0, 0), y), carnot_dilate(eps, y)) == 0.0);
}

TEST_CASE("uniform scaling differs from carnot scaling at order eps in the center") {
    CarnotHeisenbergModel carnot;
    LieExpLogModel lie;
    const Point e = pt3(0, 0, 0);
    const Point y = pt3(0, 0, 1);
    for (double t : {1e-2, 1e-3, 1e-4}) {
        const auto eps = ScaleElement::positive_real(t);
        const double carnot_center = carnot.dilate_raw(eps, e, y)[2];
        const double lie_center = lie.dilate_raw(eps, e, y)[2];
        CHECK(carnot_center == doctest::Approx(t * t));
        CHECK(lie_center == doctest::Approx(t));
        CHECK((lie_center - carnot_center) / t == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("sphere dilations scale geodesic distance exactly") {
    SphereModel sphere;
    Sampler rng(11);
    for (int i = 0; i < 20; ++i) {
        const Point x = sphere.sample_point(rng, sphere.origin(), 0.8);
        const Point y = sphere.sample_point(rng, sphere.origin(), 0.8);
        for (double e : {0.5, 0.25, 0.1}) {
            const auto eps = ScaleElement::positive_real(e);
            CHECK(std::abs(sphere.distance(x, sphere.dilate_raw(eps, x, y)) -
                           e * sphere.distance(x, y)) <= 1e-9);
        }
    }
}

TEST_CASE("sphere guards") {
    SphereModel sphere;
    CHECK_THROWS_AS(sphere.validate_point(pt3(0.5, 0.5, 0.5)), DomainError);
    Sampler rng(3);
    CHECK_THROWS_AS(sphere.sample_point(rng, sphere.origin(), 3.2), DomainError);
}

TEST_CASE("model factory") {
    CHECK(make_model("real-vector", {{"dim", 3}})->dim() == 3);
    CHECK(make_model("complex-vector", {{"dim", 2}})->dim() == 4);
    CHECK_THROWS_AS(make_model("no-such-model"), ConfigError);
    CHECK_THROWS_AS(make_model("real-vector", {{"dim", 0}}), ConfigError);
    nlohmann::json singular = {{"matrix", {{1.0, 1.0}, {1.0, 1.0}}}};
    CHECK_THROWS_AS(make_model("contractible-linear", singular), ConfigError);
    const auto listed = list_models();
    CHECK(listed.size() == 7);
    for (std::size_t i = 0; i + 1 < listed.size(); ++i) CHECK(listed[i].id < listed[i + 1].id);
}

TEST_CASE("quandle classification") {
    const double tol = 1e-9;
    auto scales_for = [](const DilationModel& m) {
        std::vector<ScaleElement> s;
        if (m.scale_variant() == ScaleVariant::integer_shift) {
            s = {ScaleElement::integer_shift(-1), ScaleElement::integer_shift(-2)};
        } else if (m.scale_variant() == ScaleVariant::nonzero_complex) {
            s = {ScaleElement::nonzero_complex({0.4, 0.2}),
                 ScaleElement::nonzero_complex({0.3, -0.1})};
        } else {
            s = {ScaleElement::positive_real(0.5), ScaleElement::positive_real(0.3)};
        }
        return s;
    };
    auto sample_for = [](const DilationModel& m) {
        Sampler rng(23);
        std::vector<Point> pts;
        for (int i = 0; i < 60; ++i) pts.push_back(m.sample_point(rng, m.origin(), 0.35));
        return pts;
    };

    for (const char* id : {"real-vector", "complex-vector", "contractible-linear",
                           "heisenberg-carnot"}) {
        const auto m = make_model(id);
        const auto report = quandle_view_check(*m, scales_for(*m), sample_for(*m), tol);
        CHECK_MESSAGE(report.quandle_family, id);
        CHECK(report.max_residual <= 1e-9);
    }

    const auto nm = make_model("non-morphism");
    const auto report = quandle_view_check(*nm, scales_for(*nm), sample_for(*nm), tol);
    CHECK_FALSE(report.quandle_family);
    CHECK(report.max_residual > 1e-6);
}
