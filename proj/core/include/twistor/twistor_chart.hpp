#pragma once

#include <Eigen/Dense>

#include "twistor/projective.hpp"
#include "twistor/sp2.hpp"
#include "twistor/sphere4.hpp"

namespace twistor {

/// An almost hermitian structure on a tangent space T_x S^4, stored as the
/// 5x5 matrix that annihilates x and restricts to the structure on x-perp.
struct TangentStructure {
    SpherePoint base;
    Mat5 j = Mat5::Zero();

    /// Max deviation from J^2 = -P, J^T J = P (P the tangent projector)
    /// and J x = 0.
    double residual() const;
};

/// Left multiplication by i on R^4 x {0}, the standard structure at the
/// north pole.
Mat5 standard_structure5();

/// The orthogonal map of R^5 restricting to the sphere isometry induced by
/// the Sp(2) row action q -> q B.
Mat5 sphere_isometry(const QuatMat2& b);

/// The structure at pi(z) carried by the fiber point z: over the north pole
/// the complex line of q = z1 + z2 j acts by left multiplication with
/// Phi(q) = q^{-1} i q, and the general fiber is reached Sp(2)-equivariantly.
TangentStructure twistor_structure(const ProjectivePoint& z);

/// Inverse chart: the fiber point over x whose structure is J. For spin -1
/// the structure transported to the north pole is a right multiplication and
/// the identification uses the same imaginary unit; it depends on the
/// deterministic Sp(2) completion of the fiber lift of x.
ProjectivePoint point_from_structure(const TangentStructure& t, int spin);

/// Unit FS-representative of the vertical (fiber) direction at z, orthogonal
/// to z itself.
Vec4c vertical_direction(const ProjectivePoint& z);

/// Projects a C^4 tangent representative onto the horizontal space:
/// removes the C z and vertical components (FS-orthogonally; the contact
/// plane is FS-orthogonal to the fibers).
Vec4c horizontal_component(const ProjectivePoint& z, const Vec4c& tangent);

}  // namespace twistor
