#pragma once

#include <string>
#include <vector>

#include "twistor/legendrian.hpp"
#include "twistor/surface.hpp"

namespace twistor {

/// Built-in verification surfaces:
///   totally_geodesic_s2  - great 2-sphere through the poles
///   small_sphere         - geodesic 2-sphere of radius r < pi/2 (not minimal)
///   flat_graph           - (u, v, u^2, v^2) in flat R^4 (not superminimal)
///   flat_complex_line    - affine complex line (u, v, 0, 0) in flat R^4
///   veronese             - the minimal Veronese immersion S^2 -> S^4
///   hyperbolic_plane     - flat chart of a totally geodesic H^2 in the ball
///   legendrian_projection - projection of a supplied Legendrian curve
ParamSurface make_catalog_surface(const std::string& id, double param = 0.0);
ParamSurface make_legendrian_projection(const NumericCurve& curve, const Rect2& grid);

std::vector<std::string> catalog_ids();

}  // namespace twistor
