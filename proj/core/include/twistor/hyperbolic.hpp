#pragma once

#include <Eigen/Dense>

#include "twistor/projective.hpp"
#include "twistor/sphere4.hpp"

namespace twistor {

/// Lorentzian product on R^{4,1}: x o y = x1 y1 + ... + x4 y4 - x5 y5.
inline double lorentz_dot(const Vec5& x, const Vec5& y) {
    return x.head<4>().dot(y.head<4>()) - x[4] * y[4];
}

/// Point of the hyperquadric H^4: x o x = -1, x5 > 0.
struct HyperboloidPoint {
    Vec5 x;

    explicit HyperboloidPoint(const Vec5& v, double tol = 1e-9);
};

/// Point of the open unit ball in R^4 (the Poincare ball model).
struct BallPoint {
    Vec4 x;

    BallPoint() : x(Vec4::Zero()) {}
    explicit BallPoint(const Vec4& v);
};

/// psi~(x) = (2x, 1 + |x|^2) / (1 - |x|^2), ball -> hyperquadric.
HyperboloidPoint stereo_h4(const BallPoint& p);
BallPoint stereo_h4_inverse(const HyperboloidPoint& h);

/// Omega = { |z1|^2 + |z2|^2 > |z3|^2 + |z4|^2 }, the twistor domain of H^4
/// in CP^3. Scale invariant; the boundary is excluded. The opposite
/// inequality appears in parts of the literature and amounts to swapping the
/// two affine charts of HP^1; this library fixes the convention above.
bool omega_membership(const ProjectivePoint& z);

/// Conformal factor of g_h = 4 |dx|^2 / (1 - |x|^2)^2.
double hyperbolic_conformal_factor(const Vec4& x);

/// Squared g_h-length of the tangent vector v at x.
double hyperbolic_metric_eval(const BallPoint& p, const Vec4& v);

}  // namespace twistor
