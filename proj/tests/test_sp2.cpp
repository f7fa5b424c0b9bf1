#include <doctest.h>

#include "twistor/sp2.hpp"

using namespace twistor;

namespace {

Vec4c random_unit_c4(Rng& rng) {
    Vec4c z;
    do {
        for (int i = 0; i < 4; ++i) z[i] = rng.complex_gaussian();
    } while (z.norm() < 1e-3);
    return z / z.norm();
}

}  // namespace

TEST_CASE("identity and membership identities") {
    CHECK(sp2_is_member(SpMatrix::identity()));
    Rng rng(20);
    for (int it = 0; it < 100; ++it) {
        const SpMatrix a = random_sp2_member(rng);
        CHECK(sp2_membership_residual(a) < 1e-10);
    }
}

TEST_CASE("non-members are rejected") {
    SpMatrix a = SpMatrix::identity();
    a.a(0, 0) = Cx(2, 0);
    CHECK(!sp2_is_member(a));
    CHECK_THROWS_AS(sp2_act(a, ProjectivePoint(Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(0, 0))),
                    DomainError);
}

TEST_CASE("action preserves alpha and induces sphere isometries") {
    Rng rng(21);
    for (int it = 0; it < 50; ++it) {
        const SpMatrix a = random_sp2_member(rng);
        for (int k = 0; k < 5; ++k) {
            const Vec4c z = random_unit_c4(rng), w = random_unit_c4(rng);
            CHECK(std::abs(alpha_form(sp2_act_vector(a, z), sp2_act_vector(a, w)) -
                           alpha_form(z, w)) < 1e-12);
            const SpherePoint x = twistor_project(ProjectivePoint(z));
            const SpherePoint y = twistor_project(ProjectivePoint(w));
            const double d0 = sphere_distance(x, y);
            const double d1 = sphere_distance(sp2_act_sphere(a, x), sp2_act_sphere(a, y));
            CHECK(std::abs(d1 - d0) < 1e-10);
        }
    }
}

TEST_CASE("action is equivariant over the projection") {
    Rng rng(22);
    for (int it = 0; it < 50; ++it) {
        const SpMatrix a = random_sp2_member(rng);
        const Vec4c z = random_unit_c4(rng);
        const ProjectivePoint p(z);
        const SpherePoint via_cp3 = twistor_project(sp2_act(a, p));
        const SpherePoint via_s4 = sp2_act_sphere(a, twistor_project(p));
        CHECK((via_cp3.x - via_s4.x).norm() < 1e-12);
    }
}

TEST_CASE("sp2 completion rows are orthonormal") {
    Rng rng(23);
    for (int it = 0; it < 200; ++it) {
        Quaternion a = rng.quaternion(), b = rng.quaternion();
        if (a.norm2() + b.norm2() < 1e-6) continue;
        const QuatMat2 m = sp2_completion(a, b);
        CHECK(m.unitarity_residual() < 1e-13);
    }
    CHECK_THROWS_AS(sp2_completion(Quaternion(), Quaternion()), DomainError);
}
