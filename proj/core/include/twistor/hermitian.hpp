#pragma once

#include <array>
#include <utility>

#include <Eigen/Dense>

#include "twistor/quaternion.hpp"
#include "twistor/rng.hpp"

namespace twistor {

using Vec6 = Eigen::Matrix<double, 6, 1>;

inline constexpr double kAlgebraTol = 1e-12;     // pure double algebra
inline constexpr double kNormalizedTol = 1e-10;  // normalized numeric inputs

/// Almost hermitian structure on R^4: an orthogonal J with J^2 = -I acting on
/// column vectors. The spin is the sign of w /\ w against the standard volume
/// form, where w(x, y) = <Jx, y>; it is computed, never asserted.
struct HermitianStructure {
    Mat4 m = Mat4::Zero();
    int spin = 0;

    /// Validates the structure equations and computes the spin.
    static HermitianStructure from_matrix(const Mat4& m, double tol = kAlgebraTol);

    /// Unchecked build for internal use where the equations hold by
    /// construction.
    static HermitianStructure unchecked(const Mat4& m, int spin) { return {m, spin}; }

    Vec4 apply(const Vec4& v) const { return m * v; }

    double structure_residual() const;  // max of |J^2+I| and |J^T J - I| entries
};

/// Pfaffian of the fundamental 2-form of an antisymmetric matrix:
/// w12 w34 - w13 w24 + w14 w23 with w_ij = <m e_i, e_j>. Equals +-1 on
/// hermitian structures and its sign is the spin.
double structure_pfaffian(const Mat4& m);

/// J_q of the Hopf parametrization: left multiplication by Phi(q) = q^{-1} i q.
/// Positive structure for every nonzero q; constant along complex lines C* q.
HermitianStructure structure_from_quaternion(const Quaternion& q);

/// Positively oriented orthonormal 4-frame, columns e1..e4.
struct Frame4 {
    Mat4 e = Mat4::Identity();

    static Frame4 standard() { return {}; }
    static Frame4 from_columns(const Vec4& e1, const Vec4& e2, const Vec4& e3, const Vec4& e4,
                               double tol = kAlgebraTol);
    Vec4 col(int i) const { return e.col(i); }

    double orthonormality_residual() const { return (e.transpose() * e - Mat4::Identity()).cwiseAbs().maxCoeff(); }
};

/// J with J(e1) = e2, J(e3) = sign * e4. Spin equals sign.
HermitianStructure structure_from_frame(const Frame4& f, int sign);

/// Bivector in Lambda^2(R^4), coefficients in the lexicographic basis
/// (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4).
struct Bivector {
    Vec6 c = Vec6::Zero();

    Bivector() = default;
    explicit Bivector(const Vec6& coeffs) : c(coeffs) {}
    static Bivector wedge(int i, int j);  // e_i ^ e_j, 0-based, i < j

    Bivector operator+(const Bivector& o) const { return Bivector(c + o.c); }
    Bivector operator-(const Bivector& o) const { return Bivector(c - o.c); }
    Bivector operator*(double s) const { return Bivector(c * s); }

    double dot(const Bivector& o) const { return c.dot(o.c); }
    double norm() const { return c.norm(); }

    /// Norm in the scaling that makes (e1^e2 +- e3^e4, ...) an orthonormal
    /// basis of Lambda^2_pm; on eigenvectors of * this is |c| / sqrt(2).
    double eigenbasis_norm() const { return c.norm() / std::sqrt(2.0); }
};

/// Hodge star on Lambda^2(R^4), defined by a ^ *b = <a,b> Omega.
Bivector hodge_star(const Bivector& b);

/// Eigenspace split b = b_plus + b_minus with *b_pm = +-b_pm.
std::pair<Bivector, Bivector> selfdual_split(const Bivector& b);

/// Inclusion Lambda^2 -> End(R^4): e_i^e_j -> e_i* (x) e_j - e_j* (x) e_i,
/// the antisymmetric matrix with lower triangle given by the coefficients.
Mat4 bivector_to_endomorphism(const Bivector& b);

/// Inverse of the inclusion restricted to antisymmetric matrices.
Bivector bivector_from_structure(const HermitianStructure& j);

/// The structure corresponding to a unit bivector in Lambda^2_sign
/// (unit in the eigenbasis norm). Throws if b is off the eigenspace or
/// not unit within kNormalizedTol.
HermitianStructure structure_from_lambda2(const Bivector& b, int sign);

/// Oriented 2-plane in R^4 spanned by the ordered orthonormal pair (u, v).
struct OrientedPlane {
    Vec4 u, v;

    static OrientedPlane from_span(const Vec4& u, const Vec4& v, double tol = kAlgebraTol);
};

/// The pair (J^+_Sigma, J^-_Sigma): both rotate by +pi/2 on the plane
/// (u -> v) and by +-pi/2 on the cooriented orthogonal complement.
std::pair<HermitianStructure, HermitianStructure> plane_to_structures(const OrientedPlane& p);

// Seeded random generators for property sweeps.
Frame4 random_frame(Rng& rng);
Bivector random_unit_eigen_bivector(Rng& rng, int sign);
OrientedPlane random_plane(Rng& rng);

}  // namespace twistor
