#pragma once

#include <Eigen/Dense>

#include "twistor/projective.hpp"
#include "twistor/quaternion.hpp"
#include "twistor/rng.hpp"
#include "twistor/sphere4.hpp"

namespace twistor {

using Mat4c = Eigen::Matrix4cd;

/// 2x2 quaternionic matrix acting on row vectors, q -> q B. Rows orthonormal
/// under the quaternionic hermitian pairing (p, q) = sum p_k conj(q_k) make
/// it an element of Sp(2).
struct QuatMat2 {
    Quaternion a, b, c, d;  // rows (a, b) and (c, d)

    static QuatMat2 identity() {
        return {Quaternion::one(), Quaternion(), Quaternion(), Quaternion::one()};
    }

    /// (q1, q2) * B for a row vector.
    std::pair<Quaternion, Quaternion> apply_row(const Quaternion& q1, const Quaternion& q2) const {
        return {q1 * a + q2 * c, q1 * b + q2 * d};
    }

    double unitarity_residual() const;
};

/// Hermitian pairing of quaternionic row 2-vectors, p conj(q)^t.
Quaternion qdot(const Quaternion& p1, const Quaternion& p2, const Quaternion& q1,
                const Quaternion& q2);

/// Sp(2) with first row (q1, q2)/|q| and second row completed by
/// Gram orthonormalization of a deterministic seed. |q| must be nonzero.
QuatMat2 sp2_completion(const Quaternion& q1, const Quaternion& q2);

QuatMat2 random_sp2(Rng& rng);

/// Matrices of U(4) cap Sp_2(C) acting on homogeneous row vectors z -> z A.
struct SpMatrix {
    Mat4c a;

    static SpMatrix identity() { return {Mat4c::Identity()}; }
};

/// J0: block diagonal ((0,-1),(1,0), (0,-1),(1,0)).
Mat4c sp_j0();

/// Complexification of the row action of a quaternionic matrix: each entry
/// b = b1 + b2 j becomes the block ((b1, b2), (-conj(b2), conj(b1))).
SpMatrix complexify(const QuatMat2& m);

/// Max residual of the two membership identities A A^H = I and A J0 A^T = J0.
double sp2_membership_residual(const SpMatrix& a);
bool sp2_is_member(const SpMatrix& a, double tol = 1e-10);

/// Random member of the group, by quaternionic Gram orthonormalization of a
/// seeded Gaussian matrix followed by complexification.
SpMatrix random_sp2_member(Rng& rng);

/// Row action z -> z A on homogeneous coordinates. Throws for non-members.
ProjectivePoint sp2_act(const SpMatrix& a, const ProjectivePoint& z);
Vec4c sp2_act_vector(const SpMatrix& a, const Vec4c& z);

/// The isometry of S^4 induced through the twistor projection.
SpherePoint sp2_act_sphere(const SpMatrix& a, const SpherePoint& x);

}  // namespace twistor
