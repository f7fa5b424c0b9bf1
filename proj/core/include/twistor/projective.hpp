#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace twistor {

using Cx = std::complex<double>;
using Vec4c = Eigen::Vector4cd;

/// Point of CP^3 held as a homogeneous representative z in C^4 \ {0}.
/// Equality is up to C* scale and is tested with the chordal distance.
struct ProjectivePoint {
    Vec4c z;

    ProjectivePoint() : z(1, 0, 0, 0) {}
    explicit ProjectivePoint(const Vec4c& hom);
    ProjectivePoint(Cx z1, Cx z2, Cx z3, Cx z4) : ProjectivePoint(Vec4c(z1, z2, z3, z4)) {}

    /// Unit-norm representative whose first nonvanishing coordinate is real
    /// and positive.
    Vec4c canonical() const;
};

/// Fubini-Study hermitian pairing <z, w> = sum z_i conj(w_i).
inline Cx fs_inner(const Vec4c& z, const Vec4c& w) { return (w.conjugate().transpose() * z)(0); }

/// Scale-free distance: min over phase of |z_hat - e^{it} w_hat| =
/// sqrt(2 - 2 |<z_hat, w_hat>|).
double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Canonical representative as a flat array of 8 doubles, re/im interleaved
/// (re z1, im z1, ..., re z4, im z4); the serialization used in reports.
std::array<double, 8> projective_flat8(const ProjectivePoint& p);

}  // namespace twistor
