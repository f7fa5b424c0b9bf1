#include <doctest.h>

#include "twistor/hermitian.hpp"
#include "twistor/rng.hpp"
#include "twistor/twistor_chart.hpp"

using namespace twistor;

namespace {

ProjectivePoint random_point(Rng& rng) {
    Vec4c z;
    do {
        for (int i = 0; i < 4; ++i) z[i] = rng.complex_gaussian();
    } while (z.norm() < 1e-3);
    return ProjectivePoint(z);
}

}  // namespace

TEST_CASE("canonical representative") {
    const ProjectivePoint p(Cx(0, 2), Cx(1, 1), Cx(0, 0), Cx(3, -4));
    const Vec4c c = p.canonical();
    CHECK(std::abs(c.norm() - 1.0) < 1e-14);
    CHECK(c[0].imag() < 1e-14);
    CHECK(c[0].real() > 0.0);

    Rng rng(9);
    for (int it = 0; it < 200; ++it) {
        const ProjectivePoint z = random_point(rng);
        Cx lam = rng.complex_gaussian();
        if (std::abs(lam) < 1e-3) continue;
        const ProjectivePoint w(Vec4c(lam * z.z));
        CHECK((z.canonical() - w.canonical()).norm() < 1e-12);
        CHECK(chordal_distance(z, w) < 1e-12);
    }
}

TEST_CASE("flat serialization of projective points") {
    const ProjectivePoint p(Cx(0, 2), Cx(0, 0), Cx(2, 0), Cx(0, 0));
    const auto flat = projective_flat8(p);
    // Canonical representative: unit norm, first coordinate real positive.
    CHECK(flat[0] == doctest::Approx(M_SQRT1_2));
    CHECK(flat[1] == doctest::Approx(0.0));
    CHECK(flat[4] == doctest::Approx(0.0));
    CHECK(flat[5] == doctest::Approx(-M_SQRT1_2));
    double n2 = 0;
    for (double v : flat) n2 += v * v;
    CHECK(n2 == doctest::Approx(1.0));
}

TEST_CASE("chordal distance") {
    const ProjectivePoint a(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0));
    const ProjectivePoint b(Cx(0, 0), Cx(1, 0), Cx(0, 0), Cx(0, 0));
    CHECK(chordal_distance(a, b) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(chordal_distance(a, a) == 0.0);
}

TEST_CASE("stereographic projection of S^4") {
    CHECK((stereo_s4(R4OrInf::finite(Vec4::Zero())).x - SpherePoint::north().x).norm() == 0.0);
    CHECK((stereo_s4(R4OrInf::infinity()).x - SpherePoint::south().x).norm() == 0.0);
    Rng rng(10);
    for (int it = 0; it < 1000; ++it) {
        const Vec4 x(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
        const SpherePoint s = stereo_s4(R4OrInf::finite(x));
        CHECK(std::abs(s.x.norm() - 1.0) < 1e-14);
        const R4OrInf back = stereo_s4_inverse(s);
        REQUIRE(!back.infinite);
        CHECK((back.x - x).norm() < 1e-12 * std::max(1.0, x.norm()));
    }
}

TEST_CASE("twistor projection examples") {
    const SpherePoint n = twistor_project(ProjectivePoint(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0)));
    CHECK((n.x - SpherePoint::north().x).norm() == 0.0);
    const SpherePoint s = twistor_project(ProjectivePoint(Cx(0, 0), Cx(0, 0), Cx(1, 0), Cx(0, 0)));
    CHECK((s.x - SpherePoint::south().x).norm() == 0.0);
    const SpherePoint n2 = twistor_project(ProjectivePoint(Cx(0, 1), Cx(0, 0), Cx(0, 0), Cx(0, 0)));
    CHECK((n2.x - n.x).norm() == 0.0);

    // The fiber over the north pole is {[z1:z2:0:0]}.
    Rng rng(11);
    for (int it = 0; it < 1000; ++it) {
        Vec4c z(rng.complex_gaussian(), rng.complex_gaussian(), Cx(0, 0), Cx(0, 0));
        if (z.norm() < 1e-3) continue;
        CHECK((twistor_project(ProjectivePoint(z)).x - SpherePoint::north().x).norm() < 1e-14);
    }
}

TEST_CASE("projection routes agree") {
    Rng rng(12);
    for (int it = 0; it < 2000; ++it) {
        const ProjectivePoint z = random_point(rng);
        const SpherePoint pz = twistor_project(z);
        const auto [q1, q2] = quaternion_pair(z.z);
        CHECK((rho(q1, q2).x - pz.x).norm() < 1e-13);
        const AffineC2Point w = phi2(z);
        const SpherePoint via =
            w.infinite ? SpherePoint::south() : stereo_s4(R4OrInf::finite(w.to_r4()));
        CHECK((via.x - pz.x).norm() < 1e-12);
    }
}

TEST_CASE("involution") {
    const ProjectivePoint z(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0));
    const ProjectivePoint expect(Cx(0, 0), Cx(1, 0), Cx(0, 0), Cx(0, 0));
    CHECK(chordal_distance(twistor_involution(z), expect) == 0.0);

    Rng rng(13);
    for (int it = 0; it < 2000; ++it) {
        const ProjectivePoint p = random_point(rng);
        const ProjectivePoint ip = twistor_involution(p);
        CHECK(chordal_distance(twistor_involution(ip), p) < 1e-13);
        CHECK((twistor_project(ip).x - twistor_project(p).x).norm() < 1e-13);
        // iota is fixed-point free: iota(z) is orthogonal to z, so the
        // chordal distance is exactly sqrt(2).
        CHECK(std::abs(chordal_distance(ip, p) - std::sqrt(2.0)) < 1e-12);
    }
}

TEST_CASE("contact form values and kernel") {
    const Vec4c z(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0));
    const Vec4c w(Cx(0, 0), Cx(1, 0), Cx(0, 0), Cx(0, 0));
    CHECK(std::abs(alpha_form(z, w) - Cx(1, 0)) == 0.0);

    // Along H_1 the kernel of alpha_z is C (z1, z2) + H_2.
    CHECK(std::abs(alpha_form(z, z)) == 0.0);
    CHECK(std::abs(alpha_form(z, Vec4c(Cx(0, 0), Cx(0, 0), Cx(1, 0), Cx(0, 0)))) == 0.0);
    CHECK(std::abs(alpha_form(z, Vec4c(Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)))) == 0.0);
    CHECK(std::abs(alpha_form(z, w)) > 0.5);

    Rng rng(14);
    for (int it = 0; it < 2000; ++it) {
        Vec4c a, b;
        for (int i = 0; i < 4; ++i) {
            a[i] = rng.complex_gaussian();
            b[i] = rng.complex_gaussian();
        }
        const double scale = std::max(1.0, a.norm() * b.norm());
        CHECK(std::abs(alpha_form(a, b) + alpha_form(b, a)) < 1e-13 * scale);
        CHECK(std::abs(alpha_form(a, a)) < 1e-13 * std::max(1.0, a.squaredNorm()));
    }
}

TEST_CASE("contact nondegeneracy sampled in the affine chart") {
    // In the chart z1 = 1 with coordinates (z2, z3, z4) the 3-form
    // alpha ^ dalpha evaluates to the constant 2 on the coordinate frame.
    Rng rng(15);
    for (int it = 0; it < 20; ++it) {
        const Cx z3 = rng.complex_gaussian(), z4 = rng.complex_gaussian();
        const auto a = [&](const Eigen::Vector3cd& t) { return t[0] + z3 * t[2] - z4 * t[1]; };
        const auto dalpha = [](const Eigen::Vector3cd& s, const Eigen::Vector3cd& t) {
            return 2.0 * (s[1] * t[2] - s[2] * t[1]);
        };
        const Eigen::Vector3cd eu = Eigen::Vector3cd::Unit(0);
        const Eigen::Vector3cd ev = Eigen::Vector3cd::Unit(1);
        const Eigen::Vector3cd ew = Eigen::Vector3cd::Unit(2);
        const Cx val = a(eu) * dalpha(ev, ew) - a(ev) * dalpha(eu, ew) + a(ew) * dalpha(eu, ev);
        CHECK(std::abs(val - Cx(2, 0)) < 1e-12);
    }
}

TEST_CASE("twistor structure of fiber points") {
    Rng rng(16);
    for (int it = 0; it < 500; ++it) {
        const ProjectivePoint z = random_point(rng);
        const TangentStructure t = twistor_structure(z);
        CHECK(t.residual() < 1e-12);
        CHECK((t.base.x - twistor_project(z).x).norm() < 1e-13);

        // Scale invariance of the structure.
        Cx lam = rng.complex_gaussian();
        if (std::abs(lam) > 1e-3) {
            const TangentStructure t2 = twistor_structure(ProjectivePoint(Vec4c(lam * z.z)));
            CHECK((t2.j - t.j).cwiseAbs().maxCoeff() < 1e-12);
        }

        // iota carries J to -J on the same fiber.
        const TangentStructure ti = twistor_structure(twistor_involution(z));
        CHECK((ti.j + t.j).cwiseAbs().maxCoeff() < 1e-12);

        // Chart inversion.
        CHECK(chordal_distance(point_from_structure(t, +1), z) < 1e-12);
    }
}

TEST_CASE("north fiber matches the Hopf parametrization") {
    Rng rng(17);
    for (int it = 0; it < 500; ++it) {
        const Cx a = rng.complex_gaussian(), b = rng.complex_gaussian();
        const Quaternion q = Quaternion::from_complex_pair(a, b);
        if (q.norm() < 1e-3) continue;
        const TangentStructure t = twistor_structure(ProjectivePoint(a, b, Cx(0, 0), Cx(0, 0)));
        const Mat4 expect = left_mult_matrix(hopf_phi(q));
        CHECK((t.j.topLeftCorner<4, 4>() - expect).cwiseAbs().maxCoeff() < 1e-13);
        CHECK((t.base.x - SpherePoint::north().x).norm() < 1e-14);
    }
}

TEST_CASE("projection intertwines i with the fiber structure") {
    // d(pi)(i zeta) = J_z d(pi)(zeta) for every tangent vector zeta: the
    // fiber direction is complex invariant and killed by d(pi), and on the
    // horizontal space this is the defining property of the twistor
    // structure. Checked by finite differences of pi along affine lines.
    Rng rng(18);
    const double h = 1e-6;
    for (int it = 0; it < 200; ++it) {
        const ProjectivePoint z = random_point(rng);
        const Vec4c zh = z.z / z.z.norm();
        Vec4c zeta;
        for (int i = 0; i < 4; ++i) zeta[i] = rng.complex_gaussian();
        const auto dpi = [&](const Vec4c& dir) {
            const Vec5 a = twistor_project(ProjectivePoint(Vec4c(zh + h * dir))).x;
            const Vec5 b = twistor_project(ProjectivePoint(Vec4c(zh - h * dir))).x;
            return Vec5((a - b) / (2 * h));
        };
        const TangentStructure t = twistor_structure(z);
        const Vec5 lhs = dpi(Cx(0, 1) * zeta);
        const Vec5 rhs = t.j * dpi(zeta);
        CHECK((lhs - rhs).norm() < 1e-7 * std::max(1.0, dpi(zeta).norm()));
    }
}

TEST_CASE("twistor structure is equivariant under the symmetry group") {
    Rng rng(19);
    for (int it = 0; it < 100; ++it) {
        const ProjectivePoint z = random_point(rng);
        const QuatMat2 b = random_sp2(rng);
        const Mat5 r = sphere_isometry(b);
        const TangentStructure t = twistor_structure(z);
        const TangentStructure ta =
            twistor_structure(ProjectivePoint(sp2_act_vector(complexify(b), z.z)));
        CHECK((ta.j - r * t.j * r.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((ta.base.x - r * t.base.x).norm() < 1e-13);
    }
}

TEST_CASE("point_from_structure rejects the wrong spin") {
    const ProjectivePoint z(Cx(1, 0), Cx(2, 1), Cx(0, -1), Cx(0.5, 0));
    const TangentStructure t = twistor_structure(z);
    CHECK_THROWS_AS(point_from_structure(t, -1), DomainError);
}
