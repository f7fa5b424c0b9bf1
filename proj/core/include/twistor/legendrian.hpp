#pragma once

#include <string>

#include "twistor/polynomial.hpp"
#include "twistor/surface.hpp"

namespace twistor {

/// Holomorphic curve in CP^3 given by four polynomial components in the
/// affine chart z1 = 1 (z1 may be any polynomial for hand-built curves).
/// Legendrian means the pullback of alpha = z1 dz2 - z2 dz1 + z3 dz4 - z4 dz3
/// is the zero polynomial; with exact coefficients that is a coefficient-level
/// statement, with double coefficients it is tested against 1e-13 relative.
template <typename C>
struct CurveT {
    Poly<C> z1, z2, z3, z4;
    bool certified = false;

    // Construction metadata when the curve came from the generator.
    Poly<C> p3, p4;
    C c0{};
    bool generated = false;
};

using ExactCurve = CurveT<RationalComplex>;
using NumericCurve = CurveT<std::complex<double>>;

/// alpha pulled back through the curve: z1 z2' - z2 z1' + z3 z4' - z4 z3'.
template <typename C>
Poly<C> alpha_pullback(const CurveT<C>& c) {
    return c.z1 * c.z2.derivative() - c.z2 * c.z1.derivative() + c.z3 * c.z4.derivative() -
           c.z4 * c.z3.derivative();
}

/// Coefficient-level certification: exact zero for rational curves, pullback
/// coefficients below 1e-13 of the squared coefficient scale otherwise.
bool certify_curve(const CurveT<RationalComplex>& c);
bool certify_curve(const CurveT<std::complex<double>>& c);

/// z1 = 1, z3 = p3, z4 = p4, z2 = c0 + int(p4 p3' - p3 p4'); the pullback of
/// alpha vanishes identically by construction and is re-checked to set the
/// certified flag.
template <typename C>
CurveT<C> generate_legendrian(const Poly<C>& p3, const Poly<C>& p4, C c0) {
    CurveT<C> c;
    c.z1 = Poly<C>::constant(C(1));
    c.z3 = p3;
    c.z4 = p4;
    c.z2 = (p4 * p3.derivative() - p3 * p4.derivative()).antiderivative(c0);
    c.p3 = p3;
    c.p4 = p4;
    c.c0 = c0;
    c.generated = true;
    c.certified = certify_curve(c);
    return c;
}

template <typename C>
CurveT<C> curve_from_components(const Poly<C>& z1, const Poly<C>& z2, const Poly<C>& z3,
                                const Poly<C>& z4) {
    CurveT<C> c;
    c.z1 = z1;
    c.z2 = z2;
    c.z3 = z3;
    c.z4 = z4;
    c.certified = certify_curve(c);
    return c;
}

NumericCurve to_numeric(const ExactCurve& c);

/// Curve component evaluation as a C^4 vector.
Vec4c curve_eval(const NumericCurve& c, Cx t);
Vec4c curve_derivative(const NumericCurve& c, Cx t);

/// The projected surface (u, v) -> pi(Z(u + iv)) on the given chart
/// rectangle. Requires a certified curve; use project_holomorphic_curve for
/// deliberately non-Legendrian controls.
ParamSurface project_curve(const NumericCurve& c, const Rect2& grid);
ParamSurface project_holomorphic_curve(const NumericCurve& c, const Rect2& grid,
                                       std::string catalog_id = "holomorphic_projection");

/// Singular values of the finite-difference Jacobian of the surface map.
struct RankProbe {
    double sigma_max = 0.0;
    double ratio = 0.0;  // sigma_min / sigma_max
};

RankProbe projection_rank_probe(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg);

/// Grid points where the Jacobian degenerates are masked: either the rank
/// ratio collapses, or the whole differential vanishes (a conformal branch
/// point keeps the ratio near one while both singular values go to zero).
inline constexpr double kBranchMaskRatio = 1e-6;
inline constexpr double kBranchMaskAbsolute = 1e-5;

bool branch_masked(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg);

// Curve files: JSON with fields chart, c0, p3, p4, z2 as [re, im] pairs.
// The Legendrian constraint is re-certified on load.
std::string curve_to_json_string(const NumericCurve& c);
std::string curve_to_json_string(const ExactCurve& c);
NumericCurve curve_from_json_string(const std::string& text);
void save_curve(const NumericCurve& c, const std::string& path);
NumericCurve load_curve(const std::string& path);

}  // namespace twistor
