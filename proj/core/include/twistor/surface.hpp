#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "twistor/sphere4.hpp"

namespace twistor {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class Target { Sphere, Ball, Flat };

/// Open chart rectangle (u, v) in R^2.
struct Rect2 {
    double umin = -1, umax = 1, vmin = -1, vmax = 1;

    bool contains(double u, double v, double margin = 0.0) const {
        return u >= umin + margin && u <= umax - margin && v >= vmin + margin && v <= vmax - margin;
    }
    double scale() const { return std::max(umax - umin, vmax - vmin); }
};

/// Parametrized immersion of a chart rectangle into S^4 (unit vectors of
/// R^5), the Poincare ball, or flat R^4. Ball and flat targets use the first
/// four components of the returned vector; the fifth must be zero.
struct ParamSurface {
    Target target = Target::Sphere;
    Rect2 domain;
    std::function<Vec5(double, double)> eval;
    int orientation = +1;  // orientation flag of the target
    std::string catalog_id;

    Vec5 operator()(double u, double v) const { return eval(u, v); }

    /// Same immersion with the target orientation reversed.
    ParamSurface reversed_target_orientation() const {
        ParamSurface s = *this;
        s.orientation = -orientation;
        return s;
    }
};

/// Finite-difference configuration. The base step is relative to the chart
/// scale; one Richardson extrapolation step raises central differences to
/// fourth order.
struct DiffConfig {
    double base_step = 1e-4;       // h = base_step * domain.scale()
    int richardson_order = 2;      // 2 = one extrapolation step, 0 = plain central
    double fiber_metric_scale = 1.0;  // lambda; kept for the twistor metric convention
    double immersion_tol = 1e-8;   // smallest/largest singular value of the Jacobian
    double conformality_tol = 1e-4;   // precondition for twistor lifts
    double indicatrix_rel_floor = 1e-7;  // degeneracy threshold relative to |S|
    double indicatrix_abs_floor = 1e-4;  // absolute radius floor for spin reporting

    double step_for(const Rect2& d) const { return base_step * d.scale(); }
};

/// Two-jet of the immersion at a chart point, with frames adapted to the
/// target geometry. Tangent and normal frames are orthonormal for the target
/// metric; for the ball target they are Euclidean-orthonormal divided by the
/// conformal factor.
struct SurfaceJet {
    Target target = Target::Sphere;
    int orientation = +1;
    Vec2 p = Vec2::Zero();
    Vec5 f = Vec5::Zero();                    // position
    Vec5 fu = Vec5::Zero(), fv = Vec5::Zero();  // first derivatives
    Vec5 fuu = Vec5::Zero(), fuv = Vec5::Zero(), fvv = Vec5::Zero();  // projected per target
    Vec5 e1 = Vec5::Zero(), e2 = Vec5::Zero();  // metric-orthonormal tangent frame
    Vec5 n3 = Vec5::Zero(), n4 = Vec5::Zero();  // metric-orthonormal normal frame
    double conformal_factor = 1.0;              // lambda(x) for the ball, 1 otherwise
    Mat2 tangent_coeffs = Mat2::Identity();     // e_a = sum_i coeffs(a,i) f_i
};

/// Metric pairing of target-tangent vectors at the jet's base point.
double metric_dot(const SurfaceJet& jet, const Vec5& a, const Vec5& b);
double metric_norm(const SurfaceJet& jet, const Vec5& a);

/// Central differences with one Richardson step; second derivatives are
/// projected onto the target's tangent space for the sphere. Throws if the
/// margin to the chart boundary is below 2h or the Jacobian is
/// rank-deficient.
SurfaceJet differentiate(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg);

/// First and second fundamental forms in the jet's orthonormal tangent frame.
struct FundamentalForms {
    Mat2 first = Mat2::Identity();   // metric in the chart basis (f_u, f_v)
    double conformality_residual = 0.0;  // (|E-G| + 2|F|) / (E+G)
    Mat2 s3 = Mat2::Zero(), s4 = Mat2::Zero();  // shape operators of n3, n4

    /// S(n) for n = cos(t) n3 + sin(t) n4.
    Mat2 shape(double angle) const {
        return std::cos(angle) * s3 + std::sin(angle) * s4;
    }
};

FundamentalForms fundamental_forms(const SurfaceJet& jet);

/// Mean curvature vector H = (tr S(n3) n3 + tr S(n4) n4) / 2 in target-tangent
/// coordinates.
Vec5 mean_curvature(const SurfaceJet& jet);
Vec5 mean_curvature(const SurfaceJet& jet, const FundamentalForms& forms);

}  // namespace twistor
