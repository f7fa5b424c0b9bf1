#include <doctest.h>

#include <cmath>

#include "twistor/catalog.hpp"
#include "twistor/indicatrix.hpp"
#include "twistor/rng.hpp"

using namespace twistor;

TEST_CASE("circle fit recovers synthetic circles") {
    Rng rng(50);
    const Vec2 center(1.3, -2.1);
    const double radius = 3.7;
    std::vector<Vec2> pts;
    for (int k = 0; k < 40; ++k) {
        const double t = 2 * M_PI * k / 40.0;
        pts.push_back(center + radius * Vec2(std::cos(t), std::sin(t)));
    }
    const CircleFit clean = fit_circle(pts);
    CHECK((clean.center - center).norm() < 1e-12);
    CHECK(std::abs(clean.radius - radius) < 1e-12);
    CHECK(clean.rms_residual < 1e-12);

    for (auto& p : pts) p += 1e-6 * Vec2(rng.gaussian(), rng.gaussian());
    const CircleFit noisy = fit_circle(pts);
    CHECK((noisy.center - center).norm() < 1e-5);
    CHECK(std::abs(noisy.radius - radius) < 1e-5);
    CHECK(noisy.rms_residual < 1e-5);

    CHECK_THROWS_AS(fit_circle({Vec2(0, 0), Vec2(1, 1)}), PreconditionError);
}

TEST_CASE("sym embedding is an isometry") {
    Rng rng(51);
    for (int it = 0; it < 200; ++it) {
        Mat2 m;
        const double a = rng.gaussian(), b = rng.gaussian(), c = rng.gaussian();
        m << a, b, b, c;
        CHECK(std::abs(sym_to_r3(m).norm() - m.norm()) < 1e-12 * std::max(1.0, m.norm()));
    }
}

TEST_CASE("totally geodesic points are degenerate") {
    const ParamSurface s = make_catalog_surface("totally_geodesic_s2");
    const DiffConfig cfg;
    const IndicatrixReport rep = indicatrix(differentiate(s, Vec2(0.3, 0.1), cfg), Vec2(1, 0), 64,
                                            cfg);
    CHECK(rep.degenerate);
    CHECK(rep.spin == 0);
    CHECK(rep.superminimal);  // the circle reduces to the origin
    CHECK(rep.full_shape == IndicatrixShape::Point);
}

TEST_CASE("holomorphic graph: circular directional indicatrix") {
    // S(e3) = diag(2, -2), S(e4) = offdiag(2, 2): for v = e1 the samples
    // trace the circle of radius 2 about the origin.
    ParamSurface s;
    s.target = Target::Flat;
    s.domain = {-1, 1, -1, 1};
    s.eval = [](double u, double v) {
        Vec5 x;
        x << u, v, u * u - v * v, 2 * u * v, 0;
        return x;
    };
    const DiffConfig cfg;
    const SurfaceJet jet = differentiate(s, Vec2(0, 0), cfg);
    for (const Vec2& v : {Vec2(1, 0), Vec2(0, 1), Vec2(M_SQRT1_2, -M_SQRT1_2)}) {
        const IndicatrixReport rep = indicatrix(jet, v, 64, cfg);
        REQUIRE(!rep.degenerate);
        CHECK(rep.center_norm < 1e-7);
        CHECK(std::abs(rep.radius - 2.0) < 1e-6);
        CHECK(rep.circularity_residual < 1e-7);
        CHECK(rep.superminimal);
    }
}

TEST_CASE("catalog flat graph fails the circle test") {
    const ParamSurface s = make_catalog_surface("flat_graph");
    const DiffConfig cfg;
    const SurfaceJet jet = differentiate(s, Vec2(0, 0), cfg);
    const FundamentalForms f = fundamental_forms(jet);
    const IndicatrixReport rep = indicatrix(f, Vec2(1, 0), 64, cfg);
    REQUIRE(!rep.degenerate);
    CHECK(rep.circularity_residual > 0.1);
    CHECK(!rep.superminimal);

    // Kommerell's dichotomy in one picture: the full indicatrix I_p of this
    // surface is a circle even though the directional curves are segments,
    // so the I_p shape alone does not certify superminimality.
    CHECK(rep.full_shape == IndicatrixShape::Circle);
}

TEST_CASE("veronese surface is superminimal at samples") {
    const ParamSurface s = make_catalog_surface("veronese");
    const DiffConfig cfg;
    int spin = 0;
    for (const Vec2& p : {Vec2(0, 0), Vec2(0.4, 0.2), Vec2(-0.3, 0.6)}) {
        const SurfaceJet jet = differentiate(s, p, cfg);
        const FundamentalForms f = fundamental_forms(jet);
        for (const Vec2& v : {Vec2(1, 0), Vec2(0.6, 0.8)}) {
            const IndicatrixReport rep = indicatrix(f, v, 64, cfg);
            REQUIRE(!rep.degenerate);
            CHECK(rep.superminimal);
            CHECK(rep.center_norm < 1e-4 * rep.radius);
            CHECK(rep.circularity_residual < 1e-3);
            CHECK(rep.full_shape == IndicatrixShape::Circle);
            if (spin == 0) spin = rep.spin;
            CHECK(rep.spin == spin);
        }
    }
}

TEST_CASE("sample count precondition") {
    const ParamSurface s = make_catalog_surface("flat_graph");
    const DiffConfig cfg;
    const SurfaceJet jet = differentiate(s, Vec2(0, 0), cfg);
    CHECK_THROWS_AS(indicatrix(jet, Vec2(1, 0), 7, cfg), PreconditionError);
}
