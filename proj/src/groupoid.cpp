#include "ea/groupoid.hpp"

#include "ea/errors.hpp"

namespace ea {

namespace {

void require_match(const Point& a, const Point& b, const char* what) {
    if (a.size() != b.size() || inf_distance(a, b) > kEndpointTol)
        throw DomainError(std::string(what) + ": arrow endpoints do not match");
}

}  // namespace

Arrow identity_arrow(const Point& p) { return {p, p}; }

bool is_identity_arrow(const Arrow& g, double tol) {
    return g.target.size() == g.source.size() && inf_distance(g.target, g.source) <= tol;
}

Arrow compose_arrows(const Arrow& g, const Arrow& h) {
    require_match(g.source, h.target, "compose_arrows");
    return {g.target, h.source};
}

Arrow add_arrows(const Arrow& g, const Arrow& h) { return compose_arrows(g, h); }

Arrow inverse_arrow(const Arrow& g) { return {g.source, g.target}; }

Arrow dif_arrows(const Arrow& g, const Arrow& h) {
    require_match(g.source, h.source, "dif_arrows");
    return {g.target, h.target};
}

Arrow dilate_arrow(const DilationModel& m, const ScaleElement& eps, const Arrow& g) {
    return {dilate(m, eps, g.source, g.target), g.source};
}

double arrow_norm(const DilationModel& m, const Arrow& g) {
    return m.distance(g.target, g.source);
}

Arrow deformed_dif(const DilationModel& m, const ScaleElement& eps, const Arrow& g,
                   const Arrow& h) {
    require_match(g.source, h.source, "deformed_dif");
    const Point& x = g.source;
    const Point& y = g.target;
    const Point& z = h.target;
    return {approx_diff(m, eps, x, z, y), dilate(m, eps, x, z)};
}

}  // namespace ea
