#include "twistor/hermitian.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

double structure_pfaffian(const Mat4& m) {
    // w_ij = <m e_i, e_j> = m(j, i)
    return m(1, 0) * m(3, 2) - m(2, 0) * m(3, 1) + m(3, 0) * m(2, 1);
}

double HermitianStructure::structure_residual() const {
    const double a = (m * m + Mat4::Identity()).cwiseAbs().maxCoeff();
    const double b = (m.transpose() * m - Mat4::Identity()).cwiseAbs().maxCoeff();
    return std::max(a, b);
}

HermitianStructure HermitianStructure::from_matrix(const Mat4& m, double tol) {
    HermitianStructure j{m, 0};
    if (j.structure_residual() > tol)
        throw DomainError("HermitianStructure: matrix is not an almost hermitian structure");
    const double pf = structure_pfaffian(m);
    if (std::abs(std::abs(pf) - 1.0) > 64 * tol)
        throw DomainError("HermitianStructure: degenerate fundamental form");
    j.spin = pf > 0 ? +1 : -1;
    return j;
}

HermitianStructure structure_from_quaternion(const Quaternion& q) {
    if (q.is_zero()) throw DomainError("structure_from_quaternion: zero quaternion");
    const Quaternion u = hopf_phi(q);
    return HermitianStructure::from_matrix(left_mult_matrix(u));
}

Frame4 Frame4::from_columns(const Vec4& e1, const Vec4& e2, const Vec4& e3, const Vec4& e4,
                            double tol) {
    Frame4 f;
    f.e.col(0) = e1;
    f.e.col(1) = e2;
    f.e.col(2) = e3;
    f.e.col(3) = e4;
    if (f.orthonormality_residual() > tol)
        throw DomainError("Frame4: columns are not orthonormal");
    if (f.e.determinant() < 0)
        throw DomainError("Frame4: orientation-reversing frame");
    return f;
}

HermitianStructure structure_from_frame(const Frame4& f, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("structure_from_frame: sign must be +-1");
    const Vec4 e1 = f.col(0), e2 = f.col(1), e3 = f.col(2), e4 = f.col(3);
    Mat4 m = e2 * e1.transpose() - e1 * e2.transpose() +
             sign * (e4 * e3.transpose() - e3 * e4.transpose());
    return HermitianStructure::from_matrix(m);
}

namespace {

constexpr int kIdx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int pair_slot(int i, int j) {
    for (int s = 0; s < 6; ++s)
        if (kIdx[s][0] == i && kIdx[s][1] == j) return s;
    return -1;
}

}  // namespace

Bivector Bivector::wedge(int i, int j) {
    Bivector b;
    if (i == j) return b;
    const double s = i < j ? 1.0 : -1.0;
    const int slot = i < j ? pair_slot(i, j) : pair_slot(j, i);
    b.c[slot] = s;
    return b;
}

Bivector hodge_star(const Bivector& b) {
    // *(e1^e2) = e3^e4, *(e1^e3) = e4^e2, *(e1^e4) = e2^e3, and * is an
    // involution.
    Bivector r;
    r.c[0] = b.c[5];
    r.c[1] = -b.c[4];
    r.c[2] = b.c[3];
    r.c[3] = b.c[2];
    r.c[4] = -b.c[1];
    r.c[5] = b.c[0];
    return r;
}

std::pair<Bivector, Bivector> selfdual_split(const Bivector& b) {
    const Bivector s = hodge_star(b);
    return {Bivector((b.c + s.c) / 2), Bivector((b.c - s.c) / 2)};
}

Mat4 bivector_to_endomorphism(const Bivector& b) {
    Mat4 m = Mat4::Zero();
    for (int s = 0; s < 6; ++s) {
        const int i = kIdx[s][0], j = kIdx[s][1];
        m(j, i) += b.c[s];
        m(i, j) -= b.c[s];
    }
    return m;
}

Bivector bivector_from_structure(const HermitianStructure& j) {
    Bivector b;
    for (int s = 0; s < 6; ++s) b.c[s] = j.m(kIdx[s][1], kIdx[s][0]);
    return b;
}

HermitianStructure structure_from_lambda2(const Bivector& b, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("structure_from_lambda2: sign must be +-1");
    const Bivector s = hodge_star(b);
    const double eig_res = (s.c - sign * b.c).norm();
    if (eig_res > kNormalizedTol * std::max(1.0, b.norm()))
        throw DomainError("structure_from_lambda2: bivector is off the requested eigenspace");
    if (std::abs(b.eigenbasis_norm() - 1.0) > kNormalizedTol)
        throw DomainError("structure_from_lambda2: bivector is not unit");
    HermitianStructure j = HermitianStructure::from_matrix(bivector_to_endomorphism(b), kNormalizedTol);
    if (j.spin != sign)
        throw DomainError("structure_from_lambda2: spin does not match the eigenspace");
    return j;
}

OrientedPlane OrientedPlane::from_span(const Vec4& u, const Vec4& v, double tol) {
    if (std::abs(u.norm() - 1) > tol || std::abs(v.norm() - 1) > tol || std::abs(u.dot(v)) > tol)
        throw DomainError("OrientedPlane: (u, v) is not an orthonormal pair");
    return {u, v};
}

namespace {

// Completes (u, v) to a positively oriented orthonormal basis of R^4.
Frame4 complete_plane(const Vec4& u, const Vec4& v) {
    Mat4 cols;
    cols.col(0) = u;
    cols.col(1) = v;
    int found = 2;
    for (int k = 0; k < 4 && found < 4; ++k) {
        Vec4 w = Vec4::Unit(k);
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < found; ++i) w -= cols.col(i).dot(w) * cols.col(i);
        if (w.norm() > 0.5) cols.col(found++) = w.normalized();
    }
    if (found < 4) {
        // Seeds were too aligned with the span; retry with a fixed skew vector.
        Vec4 w(0.5403023058681398, -0.8414709848078965, 0.3, -0.7);
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < found; ++i) w -= cols.col(i).dot(w) * cols.col(i);
        cols.col(found++) = w.normalized();
        if (found < 4) throw DomainError("plane_to_structures: degenerate plane");
    }
    if (cols.determinant() < 0) cols.col(3) = -cols.col(3);
    return Frame4::from_columns(cols.col(0), cols.col(1), cols.col(2), cols.col(3), kNormalizedTol);
}

}  // namespace

std::pair<HermitianStructure, HermitianStructure> plane_to_structures(const OrientedPlane& p) {
    const Frame4 f = complete_plane(p.u, p.v);
    return {structure_from_frame(f, +1), structure_from_frame(f, -1)};
}

Frame4 random_frame(Rng& rng) {
    while (true) {
        Mat4 g;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = rng.gaussian();
        // Gram orthonormalization of the columns; the projection pass runs
        // twice to keep the residual at machine precision near degenerate
        // samples.
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) {
            for (int pass = 0; pass < 2; ++pass)
                for (int i = 0; i < j; ++i) g.col(j) -= g.col(i).dot(g.col(j)) * g.col(i);
            const double n = g.col(j).norm();
            if (n < 1e-6) ok = false;
            else g.col(j) /= n;
        }
        if (!ok) continue;
        if (g.determinant() < 0) g.col(3) = -g.col(3);
        return Frame4::from_columns(g.col(0), g.col(1), g.col(2), g.col(3), kNormalizedTol);
    }
}

Bivector random_unit_eigen_bivector(Rng& rng, int sign) {
    Eigen::Vector3d a(rng.gaussian(), rng.gaussian(), rng.gaussian());
    while (a.norm() < 1e-8) a = Eigen::Vector3d(rng.gaussian(), rng.gaussian(), rng.gaussian());
    a.normalize();
    // a1 (e1^e2 +- e3^e4) + a2 (e1^e3 +- e4^e2) + a3 (e1^e4 +- e2^e3)
    Bivector b;
    b.c[0] = a[0];
    b.c[5] = sign * a[0];
    b.c[1] = a[1];
    b.c[4] = -sign * a[1];
    b.c[2] = a[2];
    b.c[3] = sign * a[2];
    return b;
}

OrientedPlane random_plane(Rng& rng) {
    const Frame4 f = random_frame(rng);
    return OrientedPlane::from_span(f.col(0), f.col(1), kNormalizedTol);
}

}  // namespace twistor
