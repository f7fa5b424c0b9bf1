#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistor/catalog.hpp"
#include "twistor/legendrian.hpp"
#include "twistor/report.hpp"
#include "twistor/surface.hpp"

namespace twistor {

/// Tolerances and sample counts of the verification suites. Values are fixed
/// here; the CLI may override individual tolerances.
struct SuiteConfig {
    std::uint64_t seed = 7;
    int algebra_samples = 10000;
    int map_samples = 10000;
    int group_samples = 100;
    int certification_samples = 100;
    int grid_n = 21;
    DiffConfig diff;

    double algebra_tol = 1e-12;
    double map_tol = 1e-12;
    double metric_fd_tol = 1e-6;
    double group_tol = 1e-10;
    double group_alpha_tol = 1e-12;
    double isometry_tol = 1e-10;

    double conformality_tol = 1e-6;
    double mean_curvature_tol = 1e-4;
    double center_rel_tol = 1e-4;
    double circularity_tol = 1e-3;
    double lift_chordal_tol = 1e-6;
    double alpha_path_tol = 1e-6;
    double cr_tol = 1e-6;
    double nabla_tol = 1e-4;
    double length_tol = 1e-8;
};

// Suites mirroring the acceptance criteria; every entry carries its residual,
// tolerance and verdict.
CheckReport algebra_suite(const SuiteConfig& cfg);
CheckReport maps_suite(const SuiteConfig& cfg);
CheckReport group_suite(const SuiteConfig& cfg);
CheckReport certification_suite(const SuiteConfig& cfg);
CheckReport roundtrip_suite(const NumericCurve& curve, const Rect2& grid, const SuiteConfig& cfg,
                            const std::string& label);
CheckReport negative_controls_suite(const SuiteConfig& cfg);
CheckReport degenerate_positive_suite(const SuiteConfig& cfg);
CheckReport metric_suite(const SuiteConfig& cfg);
CheckReport h4_suite(const SuiteConfig& cfg);
CheckReport catalog_suite(const std::string& id, const SuiteConfig& cfg,
                          double param = 0.0);

/// The named reference curves of the round-trip suite, built from exact
/// rational generators.
std::vector<std::pair<std::string, NumericCurve>> reference_curves();

/// Per-grid-point samples of a projected or catalog surface with the CSV
/// field set; masked points carry the mask flag.
std::vector<SurfaceSampleRow> sample_surface(const ParamSurface& s, const Rect2& grid, int n,
                                             const SuiteConfig& cfg);

}  // namespace twistor
