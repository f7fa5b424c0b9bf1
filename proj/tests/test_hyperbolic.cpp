#include <doctest.h>

#include "twistor/hyperbolic.hpp"
#include "twistor/rng.hpp"

using namespace twistor;

TEST_CASE("hyperbolic stereographic projection") {
    const HyperboloidPoint o = stereo_h4(BallPoint());
    Vec5 expect;
    expect << 0, 0, 0, 0, 1;
    CHECK((o.x - expect).norm() == 0.0);

    // x = (1/2, 0, 0, 0) maps to (4/3, 0, 0, 0, 5/3).
    const HyperboloidPoint h = stereo_h4(BallPoint(Vec4(0.5, 0, 0, 0)));
    Vec5 e2;
    e2 << 4.0 / 3.0, 0, 0, 0, 5.0 / 3.0;
    CHECK((h.x - e2).norm() < 1e-15);

    Rng rng(30);
    for (int it = 0; it < 10000; ++it) {
        Vec4 x(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
        x *= rng.uniform(0.0, 0.999) / std::max(1e-12, x.norm());
        const BallPoint b(x);
        const HyperboloidPoint hb = stereo_h4(b);
        CHECK(std::abs(lorentz_dot(hb.x, hb.x) + 1.0) <
              1e-12 * std::max(1.0, hb.x[4] * hb.x[4]));
        CHECK(hb.x[4] > 0.0);
        CHECK((stereo_h4_inverse(hb).x - x).norm() < 1e-12);
    }

    CHECK_THROWS_AS(BallPoint(Vec4(1.0, 0, 0, 0)), DomainError);
    CHECK_THROWS_AS(BallPoint(Vec4(0.8, 0.8, 0, 0)), DomainError);
}

TEST_CASE("omega membership") {
    CHECK(omega_membership(ProjectivePoint(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0))));
    CHECK(!omega_membership(ProjectivePoint(Cx(0, 0), Cx(0, 0), Cx(1, 0), Cx(0, 0))));
    // Strict inequality: the boundary is excluded.
    CHECK(!omega_membership(ProjectivePoint(Cx(1, 0), Cx(0, 0), Cx(1, 0), Cx(0, 0))));

    Rng rng(31);
    for (int it = 0; it < 2000; ++it) {
        Vec4c z;
        do {
            for (int i = 0; i < 4; ++i) z[i] = rng.complex_gaussian();
        } while (z.norm() < 1e-3);
        const ProjectivePoint p(z);
        Cx lam = rng.complex_gaussian();
        if (std::abs(lam) > 1e-3)
            CHECK(omega_membership(p) == omega_membership(ProjectivePoint(Vec4c(lam * z))));
        CHECK(omega_membership(p) == omega_membership(twistor_involution(p)));

        const AffineC2Point w = phi2(p);
        const double lhs = std::norm(z[0]) + std::norm(z[1]);
        const double rhs = std::norm(z[2]) + std::norm(z[3]);
        if (std::abs(lhs - rhs) > 1e-12 * (lhs + rhs) && !w.infinite)
            CHECK(omega_membership(p) == (w.abs2() < 1.0));
    }
}

TEST_CASE("hyperbolic metric evaluation") {
    CHECK(hyperbolic_metric_eval(BallPoint(), Vec4::Unit(0)) == doctest::Approx(4.0));
    double prev = 0.0;
    for (double r : {0.3, 0.6, 0.9, 0.99, 0.999}) {
        const double v = hyperbolic_metric_eval(BallPoint(Vec4(r, 0, 0, 0)), Vec4::Unit(1));
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(hyperbolic_conformal_factor(Vec4(1.0, 0, 0, 0)), DomainError);
}
