#include "twistor/hyperbolic.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

HyperboloidPoint::HyperboloidPoint(const Vec5& v, double tol) : x(v) {
    // The defect is measured relative to x5^2: the defining equation cancels
    // terms of that size, so an absolute test is unusable near the ideal
    // boundary.
    const double scale = std::max(1.0, x[4] * x[4]);
    if (std::abs(lorentz_dot(x, x) + 1.0) > tol * scale || x[4] <= 0.0)
        throw DomainError("HyperboloidPoint: not on the upper hyperquadric");
}

BallPoint::BallPoint(const Vec4& v) : x(v) {
    if (x.squaredNorm() >= 1.0) throw DomainError("BallPoint: |x| >= 1");
}

HyperboloidPoint stereo_h4(const BallPoint& p) {
    const double r2 = p.x.squaredNorm();
    Vec5 h;
    h.head<4>() = 2.0 * p.x / (1.0 - r2);
    h[4] = (1.0 + r2) / (1.0 - r2);
    return HyperboloidPoint(h);
}

BallPoint stereo_h4_inverse(const HyperboloidPoint& h) {
    return BallPoint(h.x.head<4>() / (1.0 + h.x[4]));
}

bool omega_membership(const ProjectivePoint& z) {
    const double a = std::norm(z.z[0]) + std::norm(z.z[1]);
    const double b = std::norm(z.z[2]) + std::norm(z.z[3]);
    return a > b;
}

double hyperbolic_conformal_factor(const Vec4& x) {
    const double r2 = x.squaredNorm();
    if (r2 >= 1.0) throw DomainError("hyperbolic_conformal_factor: |x| >= 1");
    return 2.0 / (1.0 - r2);
}

double hyperbolic_metric_eval(const BallPoint& p, const Vec4& v) {
    const double lam = hyperbolic_conformal_factor(p.x);
    return lam * lam * v.squaredNorm();
}

}  // namespace twistor
