#include <doctest.h>

#include "twistor/catalog.hpp"
#include "twistor/lift.hpp"
#include "twistor/rng.hpp"
#include "twistor/verify.hpp"

using namespace twistor;

namespace {

const NumericCurve& cubic_curve() {
    static const auto curves = reference_curves();
    return curves[0].second;
}

ParamSurface cubic_projection() {
    return project_curve(cubic_curve(), Rect2{-1.2, 1.2, -1.2, 1.2});
}

}  // namespace

TEST_CASE("lift lies in the fiber over the base point") {
    const DiffConfig cfg;
    for (const char* id : {"totally_geodesic_s2", "small_sphere", "veronese"}) {
        const ParamSurface s = make_catalog_surface(id);
        for (const Vec2& p : {Vec2(0.1, 0.2), Vec2(-0.4, 0.3)}) {
            const SurfaceJet jet = differentiate(s, p, cfg);
            for (int sign : {+1, -1}) {
                const LiftResult lift = twistor_lift(s, p, sign, cfg);
                CHECK((twistor_project(lift.point).x - jet.f).norm() < 1e-10);
                CHECK(lift.eq_intertwine_residual < 1e-8);
            }
        }
    }
}

TEST_CASE("the lift of a Legendrian projection recovers the curve") {
    const ParamSurface s = cubic_projection();
    const DiffConfig cfg;
    for (const Vec2& p : {Vec2(0, 0), Vec2(0.3, 0.2), Vec2(-0.5, 0.7), Vec2(0.9, -0.4)}) {
        const LiftResult lift = twistor_lift(s, p, kCalibratedLiftSign, cfg);
        const ProjectivePoint zc(curve_eval(cubic_curve(), Cx(p[0], p[1])));
        CHECK(chordal_distance(lift.point, zc) < 1e-6);
    }
    // The opposite sign lands elsewhere in the fiber at generic points.
    const ProjectivePoint zm = twistor_lift(s, Vec2(0.3, 0.2), -kCalibratedLiftSign, cfg).point;
    const ProjectivePoint zc(curve_eval(cubic_curve(), Cx(0.3, 0.2)));
    CHECK(chordal_distance(zm, zc) > 0.1);
}

TEST_CASE("non-conformal points are rejected") {
    ParamSurface s;
    s.target = Target::Sphere;
    s.domain = {-1, 1, -1, 1};
    s.eval = [](double u, double v) { return stereo_s4(R4OrInf::finite(Vec4(u, 2 * v, 0, 0))).x; };
    const DiffConfig cfg;
    CHECK_THROWS_AS(twistor_lift(s, Vec2(0.1, 0.1), +1, cfg), PreconditionError);
    CHECK_THROWS_AS(twistor_lift(make_catalog_surface("flat_graph"), Vec2(0, 0), +1, cfg),
                    PreconditionError);
}

TEST_CASE("totally geodesic sphere: both lifts horizontal") {
    const ParamSurface s = make_catalog_surface("totally_geodesic_s2");
    const DiffConfig cfg;
    // The last point sits on the equator, where the image crosses x5 = 0;
    // the chart completion must stay smooth across it.
    for (const Vec2& p : {Vec2(0.2, 0.0), Vec2(-0.5, 0.6), Vec2(1.0, 0.0), Vec2(0.8, -0.9)})
        for (int sign : {+1, -1})
            for (const Vec2& dir : {Vec2(1, 0), Vec2(0, 1)})
                CHECK(lift_alpha_residual(s, p, sign, dir, cfg) < 1e-6);
}

TEST_CASE("small sphere lifts are not horizontal") {
    const ParamSurface s = make_catalog_surface("small_sphere");
    const DiffConfig cfg;
    double worst = 0;
    for (int sign : {+1, -1})
        worst = std::max(worst, lift_alpha_residual(s, Vec2(0.2, 0.1), sign, Vec2(1, 0), cfg));
    CHECK(worst > 1e-2);
}

TEST_CASE("covariant derivative residuals") {
    const DiffConfig cfg;
    const ParamSurface proj = cubic_projection();
    CHECK(covariant_derivative_residual(proj, Vec2(0.3, 0.2), kCalibratedLiftSign, cfg) < 1e-4);
    CHECK(covariant_derivative_residual(proj, Vec2(-0.4, 0.6), kCalibratedLiftSign, cfg) < 1e-4);

    const ParamSurface small = make_catalog_surface("small_sphere");
    CHECK(covariant_derivative_residual(small, Vec2(0.2, 0.1), +1, cfg) > 1e-2);
    CHECK(covariant_derivative_residual(small, Vec2(0.2, 0.1), -1, cfg) > 1e-2);

    // Flat chart with constant structure: the field is parallel.
    const ParamSurface line = make_catalog_surface("flat_complex_line");
    CHECK(covariant_derivative_residual(line, Vec2(0.1, -0.2), +1, cfg) < 1e-8);
    CHECK(covariant_derivative_residual(line, Vec2(0.1, -0.2), -1, cfg) < 1e-8);
}

TEST_CASE("Cauchy-Riemann residual of the lift") {
    const ParamSurface proj = cubic_projection();
    const DiffConfig cfg;
    CHECK(lift_cr_residual(proj, Vec2(0.3, 0.2), kCalibratedLiftSign, cfg) < 1e-6);
    CHECK(lift_cr_residual(proj, Vec2(-0.6, -0.1), kCalibratedLiftSign, cfg) < 1e-6);
}

TEST_CASE("chart round-trip for arbitrary tangent planes") {
    // Build both structures of a random oriented tangent plane at a random
    // sphere point, send them through the chart, and recover them.
    Rng rng(60);
    for (int it = 0; it < 200; ++it) {
        Vec4c zc;
        for (int i = 0; i < 4; ++i) zc[i] = rng.complex_gaussian();
        if (zc.norm() < 1e-3) continue;
        const SpherePoint x = twistor_project(ProjectivePoint(zc));

        // Orthonormal pair tangent at x.
        Vec5 u = Vec5::Zero(), v = Vec5::Zero();
        for (int i = 0; i < 5; ++i) {
            u[i] = rng.gaussian();
            v[i] = rng.gaussian();
        }
        u -= u.dot(x.x) * x.x;
        if (u.norm() < 1e-2) continue;
        u.normalize();
        v -= v.dot(x.x) * x.x + v.dot(u) * u;
        if (v.norm() < 1e-2) continue;
        v.normalize();

        // Complete to a positively oriented frame of T_x S^4.
        Vec5 n3 = Vec5::Zero(), n4 = Vec5::Zero();
        int found = 0;
        for (int i = 0; i < 5 && found < 2; ++i) {
            Vec5 w = Vec5::Unit(i);
            w -= w.dot(x.x) * x.x + w.dot(u) * u + w.dot(v) * v;
            if (found == 1) w -= w.dot(n3) * n3;
            if (w.norm() < 0.3) continue;
            (found == 0 ? n3 : n4) = w.normalized();
            ++found;
        }
        if (found < 2) continue;
        Mat5 frame;
        frame.col(0) = x.x;
        frame.col(1) = u;
        frame.col(2) = v;
        frame.col(3) = n3;
        frame.col(4) = n4;
        if (frame.determinant() < 0) n4 = -n4;

        for (int sign : {+1, -1}) {
            TangentStructure t;
            t.base = x;
            t.j = v * u.transpose() - u * v.transpose() +
                  sign * (n4 * n3.transpose() - n3 * n4.transpose());
            const ProjectivePoint z = point_from_structure(t, sign);
            CHECK((twistor_project(z).x - x.x).norm() < 1e-12);
            if (sign == +1)
                CHECK((twistor_structure(z).j - t.j).cwiseAbs().maxCoeff() < 1e-11);
            // The chart is a function of the structure alone.
            const ProjectivePoint again = point_from_structure(t, sign);
            CHECK(chordal_distance(z, again) < 1e-13);
        }
    }
}

TEST_CASE("lifts are equivariant under the symmetry group") {
    const ParamSurface s = cubic_projection();
    const DiffConfig cfg;
    Rng rng(61);
    for (int it = 0; it < 10; ++it) {
        const QuatMat2 b = random_sp2(rng);
        const Mat5 r = sphere_isometry(b);
        ParamSurface moved = s;
        moved.eval = [s, r](double u, double v) { return Vec5(r * s(u, v)); };
        const SpMatrix a = complexify(b);
        for (const Vec2& p : {Vec2(0.3, 0.2), Vec2(-0.4, 0.5)}) {
            const ProjectivePoint direct = twistor_lift(moved, p, kCalibratedLiftSign, cfg).point;
            const ProjectivePoint via_group =
                sp2_act(a, twistor_lift(s, p, kCalibratedLiftSign, cfg).point);
            CHECK(chordal_distance(direct, via_group) < 1e-10);
        }
    }
}

TEST_CASE("minimality plus holomorphic lift iff horizontal, at catalog scale") {
    const DiffConfig cfg;
    // Positive: the cubic projection is minimal and its lift is horizontal.
    const ParamSurface proj = cubic_projection();
    const SurfaceJet jet = differentiate(proj, Vec2(0.4, -0.3), cfg);
    CHECK(metric_norm(jet, mean_curvature(jet)) < 1e-4);
    CHECK(lift_alpha_residual(proj, Vec2(0.4, -0.3), kCalibratedLiftSign, Vec2(1, 0), cfg) < 1e-6);

    // Negative: the projection of the non-Legendrian (1, t, t, t) admits a
    // holomorphic lift (the curve itself) but is not minimal.
    const PolyC one = PolyC::constant(Cx(1, 0));
    const PolyC t(std::vector<Cx>{Cx(0, 0), Cx(1, 0)});
    const NumericCurve bad = curve_from_components(one, t, t, t);
    const ParamSurface nl = project_holomorphic_curve(bad, Rect2{-1.2, 1.2, -1.2, 1.2});
    const SurfaceJet jet2 = differentiate(nl, Vec2(0.3, 0.14), cfg);
    CHECK(metric_norm(jet2, mean_curvature(jet2)) > 1e-2);
}
