#pragma once

#include "twistor/surface.hpp"
#include "twistor/twistor_chart.hpp"

namespace twistor {

/// Which twistor lift sign reproduces a holomorphic Legendrian curve from its
/// projection in this chart, frozen from the reference cubic curve; the
/// indicatrix winding of those projections matches the same sign.
inline constexpr int kCalibratedLiftSign = +1;

struct LiftResult {
    ProjectivePoint point;
    TangentStructure structure;   // J_Sigma of the requested sign on T_x S^4
    double eq_intertwine_residual = 0.0;  // |J df - df I| / |df|
    double conformality_residual = 0.0;
};

/// Twistor lift of a conformal immersion into S^4 at a chart point: the
/// tangent-plane structure of the requested sign, identified with a point of
/// the fiber of CP^3 over f(p). Throws PreconditionError off the conformal
/// locus or for non-sphere targets.
LiftResult twistor_lift(const ParamSurface& s, const Vec2& p, int sign, const DiffConfig& cfg);

/// The tangent-plane structure field J_Sigma (any immersion, any target).
TangentStructure plane_structure_field(const ParamSurface& s, const Vec2& p, int sign,
                                       const DiffConfig& cfg);

/// |alpha(z, dz/dt)| along the lifted path through p in chart direction w,
/// normalized by the projective speed. Zero for horizontal lifts.
double lift_alpha_residual(const ParamSurface& s, const Vec2& p, int sign, const Vec2& w,
                           const DiffConfig& cfg);

/// Cauchy-Riemann residual of the horizontal part of the lift differential:
/// |(dF)^h(I w) - i (dF)^h(w)| / |(dF)^h|, via phase-aligned differences.
double lift_cr_residual(const ParamSurface& s, const Vec2& p, int sign, const DiffConfig& cfg);

/// Operator residual of nabla F on f*(T X) over an ambient-projected test
/// frame, maximized over the two chart directions. Supports sphere and flat
/// targets.
double covariant_derivative_residual(const ParamSurface& s, const Vec2& p, int sign,
                                     const DiffConfig& cfg);

}  // namespace twistor
