#pragma once

#include <functional>

#include "twistor/surface.hpp"

namespace twistor {

/// Chart path t -> (u, v), t in [0, 1].
using ChartPath = std::function<Vec2(double)>;

/// Intrinsic length of f o path by adaptive Simpson integration of
/// |df(path')|_g; the path derivative is taken by central differences.
/// Throws if the path leaves the chart domain.
double intrinsic_length(const ParamSurface& s, const ChartPath& path, const DiffConfig& cfg,
                        double tol = 1e-10);

/// Max over grid-point pairs of the graph shortest path on the sampled
/// metric graph (8-neighbor stencil). A lower bound for the intrinsic
/// diameter of the patch.
double diameter_estimate(const ParamSurface& s, int grid_per_axis, const DiffConfig& cfg);

}  // namespace twistor
