#pragma once

#include "ea/quasigroup.hpp"

namespace ea {

/// An arrow of the trivial pair groupoid over a model's carrier, stored as
/// (target, source): the arrow (x, y) has source y and target x, and composition reads
/// (x, u)(u, v) = (x, v).
struct Arrow {
    Point target;
    Point source;
};

Arrow identity_arrow(const Point& p);

bool is_identity_arrow(const Arrow& g, double tol = 1e-12);

/// Endpoint matching uses an absolute 1e-12 tolerance throughout this module.
inline constexpr double kEndpointTol = 1e-12;

/// (x, u)(u, v) = (x, v); throws DomainError when source(g) != target(h).
Arrow compose_arrows(const Arrow& g, const Arrow& h);

/// Alias for compose_arrows.
Arrow add_arrows(const Arrow& g, const Arrow& h);

/// (x, y) -> (y, x); compose(g, inverse(g)) is the identity at target(g).
Arrow inverse_arrow(const Arrow& g);

/// dif[(u, x), (v, x)] = (u, x)(v, x)^-1 = (u, v); requires equal sources.
Arrow dif_arrows(const Arrow& g, const Arrow& h);

/// Dilation of arrows, delta_eps(x, y) = (y o_eps x, y): the target is dilated toward
/// the source, the source is preserved. Guarded by the model's locality radius.
Arrow dilate_arrow(const DilationModel& m, const ScaleElement& eps, const Arrow& g);

/// The model distance between target and source, a norm on arrows.
double arrow_norm(const DilationModel& m, const Arrow& g);

/// The deformed difference dif_eps, defined on same-source pairs by
///   dilate_arrow(eps, dif_eps(g, h)) = dif_arrows(dilate_arrow(eps, g), dilate_arrow(eps, h)).
/// Closed form for g = (y, x), h = (z, x):  dif_eps(g, h) = (Delta^x_eps(z, y), x o_eps z).
Arrow deformed_dif(const DilationModel& m, const ScaleElement& eps, const Arrow& g,
                   const Arrow& h);

}  // namespace ea
