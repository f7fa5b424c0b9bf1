#include "twistor/sphere4.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

SpherePoint::SpherePoint(const Vec5& v, double tol) : x(v) {
    if (std::abs(x.norm() - 1.0) > tol) throw DomainError("SpherePoint: not on the unit sphere");
}

double sphere_distance(const SpherePoint& a, const SpherePoint& b) {
    const double c = std::clamp(a.x.dot(b.x), -1.0, 1.0);
    return std::acos(c);
}

SpherePoint stereo_s4(const R4OrInf& p) {
    if (p.infinite) return SpherePoint::south();
    const double r2 = p.x.squaredNorm();
    Vec5 s;
    s.head<4>() = 2.0 * p.x / (1.0 + r2);
    s[4] = (1.0 - r2) / (1.0 + r2);
    return SpherePoint(s);
}

R4OrInf stereo_s4_inverse(const SpherePoint& s) {
    if (1.0 + s.x[4] <= 1e-14) return R4OrInf::infinity();
    return R4OrInf::finite(s.x.head<4>() / (1.0 + s.x[4]));
}

std::pair<Quaternion, Quaternion> quaternion_pair(const Vec4c& z) {
    return {Quaternion::from_complex_pair(z[0], z[1]), Quaternion::from_complex_pair(z[2], z[3])};
}

Vec4c complex_coords(const Quaternion& q1, const Quaternion& q2) {
    return Vec4c(q1.z1(), q1.z2(), q2.z1(), q2.z2());
}

AffineC2Point phi2(const ProjectivePoint& z) {
    const Cx z1 = z.z[0], z2 = z.z[1], z3 = z.z[2], z4 = z.z[3];
    const double d = std::norm(z1) + std::norm(z2);
    const double n = std::norm(z3) + std::norm(z4);
    AffineC2Point w;
    if (d <= 1e-28 * (d + n)) {
        w.infinite = true;
        return w;
    }
    w.w1 = (std::conj(z1) * z3 + z2 * std::conj(z4)) / d;
    w.w2 = (std::conj(z1) * z4 - z2 * std::conj(z3)) / d;
    return w;
}

SpherePoint rho(const Quaternion& q1, const Quaternion& q2) {
    const double n2 = q1.norm2() + q2.norm2();
    if (n2 == 0.0) throw DomainError("rho: zero quaternionic vector");
    const Quaternion a = q1.conj() * q2;
    Vec5 s;
    s[0] = 2 * a.x1 / n2;
    s[1] = 2 * a.x2 / n2;
    s[2] = 2 * a.x3 / n2;
    s[3] = 2 * a.x4 / n2;
    s[4] = (q1.norm2() - q2.norm2()) / n2;
    return SpherePoint(s);
}

SpherePoint twistor_project(const ProjectivePoint& z) {
    const Cx z1 = z.z[0], z2 = z.z[1], z3 = z.z[2], z4 = z.z[3];
    const double n2 = z.z.squaredNorm();
    const Cx a = std::conj(z1) * z3 + z2 * std::conj(z4);
    const Cx b = std::conj(z1) * z4 - z2 * std::conj(z3);
    Vec5 s;
    s[0] = 2 * a.real() / n2;
    s[1] = 2 * a.imag() / n2;
    s[2] = 2 * b.real() / n2;
    s[3] = 2 * b.imag() / n2;
    s[4] = (std::norm(z1) + std::norm(z2) - std::norm(z3) - std::norm(z4)) / n2;
    return SpherePoint(s);
}

std::pair<Quaternion, Quaternion> fiber_lift(const SpherePoint& x) {
    const double x5 = x.x[4];
    if (1.0 + x5 <= 1e-14) return {Quaternion(), Quaternion::one()};
    const double a = std::sqrt((1.0 + x5) / 2.0);
    const Quaternion v = x.quat_part();
    return {Quaternion(a, 0, 0, 0), v / (2.0 * a)};
}

ProjectivePoint twistor_involution(const ProjectivePoint& z) {
    return ProjectivePoint(Vec4c(-std::conj(z.z[1]), std::conj(z.z[0]), -std::conj(z.z[3]),
                                 std::conj(z.z[2])));
}

}  // namespace twistor
