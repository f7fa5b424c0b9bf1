#include "twistor/twistor_chart.hpp"

#include <cmath>

#include "twistor/error.hpp"
#include "twistor/hermitian.hpp"

namespace twistor {

double TangentStructure::residual() const {
    const Mat5 p = Mat5::Identity() - base.x * base.x.transpose();
    const double a = (j * j + p).cwiseAbs().maxCoeff();
    const double b = (j.transpose() * j - p).cwiseAbs().maxCoeff();
    const double c = (j * base.x).cwiseAbs().maxCoeff();
    return std::max({a, b, c});
}

Mat5 standard_structure5() {
    Mat5 j = Mat5::Zero();
    j.topLeftCorner<4, 4>() = left_mult_matrix(Quaternion::i());
    return j;
}

Mat5 sphere_isometry(const QuatMat2& b) {
    // A sphere isometry extends to O(5); its columns are the images of the
    // basis points, each obtained by pushing a fiber lift through the action.
    Mat5 r;
    for (int i = 0; i < 5; ++i) {
        Vec5 e = Vec5::Zero();
        e[i] = 1.0;
        const auto [q1, q2] = fiber_lift(SpherePoint(e));
        const auto [p1, p2] = b.apply_row(q1, q2);
        r.col(i) = rho(p1, p2).x;
    }
    return r;
}

TangentStructure twistor_structure(const ProjectivePoint& z) {
    const auto [q1, q2] = quaternion_pair(z.z);
    const QuatMat2 b = sp2_completion(q1, q2);
    const Mat5 r = sphere_isometry(b);
    TangentStructure t;
    t.base = SpherePoint(r.col(4));
    t.j = r * standard_structure5() * r.transpose();
    return t;
}

ProjectivePoint point_from_structure(const TangentStructure& t, int spin) {
    if (spin != 1 && spin != -1) throw DomainError("point_from_structure: spin must be +-1");
    const auto [q1, q2] = fiber_lift(t.base);
    const QuatMat2 b = sp2_completion(q1, q2);
    const Mat5 r = sphere_isometry(b);
    const Mat5 j5 = r.transpose() * t.j * r;  // structure transported to the north pole
    const Mat4 j4 = j5.topLeftCorner<4, 4>();
    const Quaternion u = Quaternion::from_vec(j4.col(0));
    if (std::abs(u.norm() - 1.0) > 1e-8 || std::abs(u.x1) > 1e-8)
        throw DomainError("point_from_structure: not a tangent hermitian structure");
    const Mat4 expected = spin > 0 ? left_mult_matrix(u) : right_mult_matrix(u);
    if ((j4 - expected).cwiseAbs().maxCoeff() > 1e-8)
        throw DomainError("point_from_structure: structure has the opposite spin");
    // Solve Phi(c) = u; c = i + u works unless u = -i.
    Quaternion c = Quaternion::i() + u;
    if (c.norm() < 1e-8) c = Quaternion::j();
    Vec4c zn(c.z1(), c.z2(), Cx(0, 0), Cx(0, 0));
    return ProjectivePoint(sp2_act_vector(complexify(b), zn));
}

Vec4c vertical_direction(const ProjectivePoint& z) {
    const Vec4c zh = z.z / z.z.norm();
    // The fiber over pi(z) is the set of complex lines in the quaternionic
    // line H q; j z spans the remaining complex direction in it.
    const auto [q1, q2] = quaternion_pair(zh);
    const Quaternion j = Quaternion::j();
    Vec4c v = complex_coords(j * q1, j * q2);
    v -= fs_inner(v, zh) * zh;
    const double n = v.norm();
    if (n < 1e-12) throw DomainError("vertical_direction: degenerate fiber direction");
    return v / n;
}

Vec4c horizontal_component(const ProjectivePoint& z, const Vec4c& tangent) {
    const Vec4c zh = z.z / z.z.norm();
    Vec4c h = tangent - fs_inner(tangent, zh) * zh;
    const Vec4c v = vertical_direction(z);
    h -= fs_inner(h, v) * v;
    return h;
}

}  // namespace twistor
