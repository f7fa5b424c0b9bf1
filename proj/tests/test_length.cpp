#include <doctest.h>

#include <cmath>

#include "twistor/catalog.hpp"
#include "twistor/length.hpp"

using namespace twistor;

TEST_CASE("great circle length") {
    const ParamSurface s = make_catalog_surface("totally_geodesic_s2");
    const DiffConfig cfg;
    const ChartPath equator = [](double t) {
        return Vec2(std::cos(2 * M_PI * t), std::sin(2 * M_PI * t));
    };
    CHECK(std::abs(intrinsic_length(s, equator, cfg) - 2 * M_PI) < 1e-8);
}

TEST_CASE("hyperbolic radial distance") {
    const ParamSurface s = make_catalog_surface("hyperbolic_plane");
    const DiffConfig cfg;
    for (double r : {0.5, 0.9, 0.99}) {
        const ChartPath radial = [r](double t) { return Vec2(r * t, 0.0); };
        // Closed-form oracle: the hyperbolic distance to radius r is 2 atanh r.
        CHECK(std::abs(intrinsic_length(s, radial, cfg) - 2 * std::atanh(r)) < 1e-8);
    }
}

TEST_CASE("constant paths and domain violations") {
    const ParamSurface s = make_catalog_surface("totally_geodesic_s2");
    const DiffConfig cfg;
    const ChartPath still = [](double) { return Vec2(0.2, 0.3); };
    CHECK(std::abs(intrinsic_length(s, still, cfg)) < 1e-12);
    const ChartPath escape = [](double t) { return Vec2(4 * t, 0.0); };
    CHECK_THROWS_AS(intrinsic_length(s, escape, cfg), DomainError);
}

TEST_CASE("diameter estimate sanity") {
    const ParamSurface s = make_catalog_surface("totally_geodesic_s2");
    const DiffConfig cfg;
    const double d = diameter_estimate(s, 13, cfg);
    // The patch covers more than a hemisphere of a unit great sphere.
    CHECK(d > 2.0);
    CHECK(d < 4.5);
}
