#pragma once

#include <vector>

#include "twistor/surface.hpp"

namespace twistor {

/// Least-squares circle through 2D points: algebraic (Kasa) initialization
/// followed by Gauss-Newton refinement of (center, radius).
struct CircleFit {
    Vec2 center = Vec2::Zero();
    double radius = 0.0;
    double rms_residual = 0.0;  // rms of |p - center| - radius
};

CircleFit fit_circle(const std::vector<Vec2>& pts, int gauss_newton_steps = 1);

enum class IndicatrixShape { Point, Segment, Ellipse, Circle };

/// The curve n -> S(n) v over the unit normal circle, with its circle fit and
/// the winding sign of the traversal. The full indicatrix I_p is embedded in
/// R^3 by (a, b; b, c) -> ((a+c)/sqrt2, sqrt2 b, (a-c)/sqrt2).
struct IndicatrixReport {
    std::vector<Vec2> samples;      // S(n(t)) v in the orthonormal tangent frame
    Vec2 center = Vec2::Zero();     // fitted circle center
    double radius = 0.0;
    double center_norm = 0.0;
    double circularity_residual = 0.0;  // rms radial deviation / radius
    double planarity_residual = 0.0;    // out-of-plane rms of the R^3 indicatrix
    int spin = 0;                       // +-1, or 0 when degenerate
    bool degenerate = false;
    double shape_norm = 0.0;            // Frobenius norm of [S3 | S4]
    IndicatrixShape full_shape = IndicatrixShape::Point;  // classification of I_p
    bool superminimal = false;          // center and circularity below tolerance

    static constexpr double kCenterTol = 1e-4;       // relative to radius
    static constexpr double kCircularityTol = 1e-3;
};

/// Samples S(n) v over K uniform normal angles and fits a circle. The spin is
/// the rotation sense of the samples relative to the cooriented normal
/// circle; it is reported only above the degeneracy threshold.
IndicatrixReport indicatrix(const FundamentalForms& forms, const Vec2& v, int samples,
                            const DiffConfig& cfg);
IndicatrixReport indicatrix(const SurfaceJet& jet, const Vec2& v, int samples,
                            const DiffConfig& cfg);

/// Isometric embedding Sym(R^2) -> R^3.
Eigen::Vector3d sym_to_r3(const Mat2& s);

}  // namespace twistor
