#pragma once

#include <optional>

#include <Eigen/Dense>

#include "twistor/projective.hpp"
#include "twistor/quaternion.hpp"

namespace twistor {

using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;

/// Point of the unit sphere S^4 in R^5 = C + C + R, oriented by the outward
/// vector field.
struct SpherePoint {
    Vec5 x;

    SpherePoint() : x(Vec5::Zero()) { x[4] = 1.0; }
    explicit SpherePoint(const Vec5& v, double tol = 1e-9);

    static SpherePoint north() { return SpherePoint(); }
    static SpherePoint south() {
        Vec5 v = Vec5::Zero();
        v[4] = -1.0;
        return SpherePoint(v);
    }

    /// The R^4 = H part (x1..x4) as a quaternion.
    Quaternion quat_part() const { return {x[0], x[1], x[2], x[3]}; }
};

double sphere_distance(const SpherePoint& a, const SpherePoint& b);

/// R^4 with a point at infinity, the domain of the stereographic projection.
struct R4OrInf {
    Vec4 x = Vec4::Zero();
    bool infinite = false;

    static R4OrInf infinity() { return {Vec4::Zero(), true}; }
    static R4OrInf finite(const Vec4& v) { return {v, false}; }
};

/// psi(x) = (2x, 1 - |x|^2) / (1 + |x|^2), with psi(inf) the south pole.
SpherePoint stereo_s4(const R4OrInf& p);
R4OrInf stereo_s4_inverse(const SpherePoint& s);

/// Affine chart C^2 of HP^1 = C^2 + {inf}.
struct AffineC2Point {
    Cx w1{0, 0}, w2{0, 0};
    bool infinite = false;

    double abs2() const { return std::norm(w1) + std::norm(w2); }
    Vec4 to_r4() const { return Vec4(w1.real(), w1.imag(), w2.real(), w2.imag()); }
};

/// Quaternionic coordinates (q1, q2) = (z1 + z2 j, z3 + z4 j) of z in C^4.
std::pair<Quaternion, Quaternion> quaternion_pair(const Vec4c& z);
Vec4c complex_coords(const Quaternion& q1, const Quaternion& q2);

/// phi(q1, q2) = q1^{-1} q2, the affine chart map H^2_* -> C^2 + {inf}.
AffineC2Point phi2(const ProjectivePoint& z);

/// rho(q1, q2) = (2 conj(q1) q2, |q1|^2 - |q2|^2) / |q|^2 in S^4.
SpherePoint rho(const Quaternion& q1, const Quaternion& q2);

/// A unit vector (q1, q2) of H^2 with rho(q1, q2) = x; q1 is real and
/// nonnegative, so the lift is deterministic.
std::pair<Quaternion, Quaternion> fiber_lift(const SpherePoint& x);

/// The twistor projection pi: CP^3 -> S^4 in homogeneous coordinates.
SpherePoint twistor_project(const ProjectivePoint& z);

/// iota([z1:z2:z3:z4]) = [-conj(z2):conj(z1):-conj(z4):conj(z3)],
/// the fibrewise antipodal map J -> -J.
ProjectivePoint twistor_involution(const ProjectivePoint& z);

/// alpha evaluated as a bilinear form: alpha(z, w) = z1 w2 - z2 w1 + z3 w4 - z4 w3,
/// matching alpha = z1 dz2 - z2 dz1 + z3 dz4 - z4 dz3.
inline Cx alpha_form(const Vec4c& z, const Vec4c& w) {
    return z[0] * w[1] - z[1] * w[0] + z[2] * w[3] - z[3] * w[2];
}

}  // namespace twistor
