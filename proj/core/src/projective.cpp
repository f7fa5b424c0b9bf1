#include "twistor/projective.hpp"

#include <algorithm>
#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

ProjectivePoint::ProjectivePoint(const Vec4c& hom) : z(hom) {
    if (!(z.norm() > 0.0)) throw DomainError("ProjectivePoint: all coordinates vanish");
}

Vec4c ProjectivePoint::canonical() const {
    Vec4c u = z / z.norm();
    int lead = 0;
    while (lead < 3 && std::abs(u[lead]) <= 1e-14) ++lead;
    const Cx p = u[lead] / std::abs(u[lead]);
    return u * std::conj(p);
}

std::array<double, 8> projective_flat8(const ProjectivePoint& p) {
    const Vec4c c = p.canonical();
    std::array<double, 8> out;
    for (int i = 0; i < 4; ++i) {
        out[2 * i] = c[i].real();
        out[2 * i + 1] = c[i].imag();
    }
    return out;
}

double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
    const Vec4c za = a.z / a.z.norm();
    const Vec4c zb = b.z / b.z.norm();
    // min over phase of |za - e^{it} zb|; the minimizing phase is that of
    // <za, zb>. Taking the norm of the aligned difference stays accurate for
    // nearby points, where 2 - 2|<za, zb>| cancels catastrophically.
    const Cx inner = fs_inner(za, zb);
    const double m = std::abs(inner);
    if (m < 1e-300) return std::sqrt(2.0);
    return (za - zb * (inner / m)).norm();
}

}  // namespace twistor
