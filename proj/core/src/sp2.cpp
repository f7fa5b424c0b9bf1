#include "twistor/sp2.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

Quaternion qdot(const Quaternion& p1, const Quaternion& p2, const Quaternion& q1,
                const Quaternion& q2) {
    return p1 * q1.conj() + p2 * q2.conj();
}

double QuatMat2::unitarity_residual() const {
    const Quaternion r11 = qdot(a, b, a, b) - Quaternion::one();
    const Quaternion r12 = qdot(a, b, c, d);
    const Quaternion r22 = qdot(c, d, c, d) - Quaternion::one();
    return std::max({r11.norm(), r12.norm(), r22.norm()});
}

QuatMat2 sp2_completion(const Quaternion& q1, const Quaternion& q2) {
    const double n = std::sqrt(q1.norm2() + q2.norm2());
    if (n == 0.0) throw DomainError("sp2_completion: zero row");
    const Quaternion r1 = q1 / n, r2 = q2 / n;
    // Seed the second row with e2 unless the first component is nearly zero
    // (the fiber over the south polar cap); keeping one seed on almost all of
    // the sphere makes the completion smooth away from that cap, which the
    // minus-sign chart of point_from_structure relies on. The left Gram
    // coefficient keeps rows orthonormal under qdot.
    Quaternion s1, s2;
    if (q1.norm2() >= 0.01 * (q1.norm2() + q2.norm2())) {
        s1 = Quaternion();
        s2 = Quaternion::one();
    } else {
        s1 = Quaternion::one();
        s2 = Quaternion();
    }
    const Quaternion lambda = qdot(s1, s2, r1, r2);
    Quaternion t1 = s1 - lambda * r1;
    Quaternion t2 = s2 - lambda * r2;
    const double tn = std::sqrt(t1.norm2() + t2.norm2());
    return {r1, r2, t1 / tn, t2 / tn};
}

QuatMat2 random_sp2(Rng& rng) {
    while (true) {
        Quaternion a = rng.quaternion(), b = rng.quaternion();
        const double n = std::sqrt(a.norm2() + b.norm2());
        if (n < 1e-6) continue;
        QuatMat2 m = sp2_completion(a, b);
        // Randomize the second row within its circle fiber.
        const Quaternion u = rng.unit_quaternion();
        m.c = u * m.c;
        m.d = u * m.d;
        if (m.unitarity_residual() < 1e-12) return m;
    }
}

Mat4c sp_j0() {
    Mat4c j = Mat4c::Zero();
    j(0, 1) = Cx(-1, 0);
    j(1, 0) = Cx(1, 0);
    j(2, 3) = Cx(-1, 0);
    j(3, 2) = Cx(1, 0);
    return j;
}

namespace {

// Row action of b = b1 + b2 j on (z', z'') is (z', z'') times the block
// ((b1, b2), (-conj(b2), conj(b1))).
void put_block(Mat4c& a, int row, int col, const Quaternion& b) {
    const Cx b1 = b.z1(), b2 = b.z2();
    a(2 * row + 0, 2 * col + 0) = b1;
    a(2 * row + 0, 2 * col + 1) = b2;
    a(2 * row + 1, 2 * col + 0) = -std::conj(b2);
    a(2 * row + 1, 2 * col + 1) = std::conj(b1);
}

}  // namespace

SpMatrix complexify(const QuatMat2& m) {
    Mat4c a;
    put_block(a, 0, 0, m.a);
    put_block(a, 0, 1, m.b);
    put_block(a, 1, 0, m.c);
    put_block(a, 1, 1, m.d);
    return {a};
}

double sp2_membership_residual(const SpMatrix& m) {
    const double u = (m.a * m.a.adjoint() - Mat4c::Identity()).cwiseAbs().maxCoeff();
    const Mat4c j0 = sp_j0();
    const double s = (m.a * j0 * m.a.transpose() - j0).cwiseAbs().maxCoeff();
    return std::max(u, s);
}

bool sp2_is_member(const SpMatrix& a, double tol) { return sp2_membership_residual(a) <= tol; }

SpMatrix random_sp2_member(Rng& rng) { return complexify(random_sp2(rng)); }

Vec4c sp2_act_vector(const SpMatrix& a, const Vec4c& z) { return a.a.transpose() * z; }

ProjectivePoint sp2_act(const SpMatrix& a, const ProjectivePoint& z) {
    if (!sp2_is_member(a)) throw DomainError("sp2_act: matrix is not in U(4) cap Sp_2(C)");
    return ProjectivePoint(sp2_act_vector(a, z.z));
}

SpherePoint sp2_act_sphere(const SpMatrix& a, const SpherePoint& x) {
    const auto [q1, q2] = fiber_lift(x);
    return twistor_project(sp2_act(a, ProjectivePoint(complex_coords(q1, q2))));
}

}  // namespace twistor
