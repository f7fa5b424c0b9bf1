#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "twistor/error.hpp"

namespace twistor {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Quaternion q = x1 + x2*i + x3*j + x4*k over the basis (1, i, j, k).
/// R^4 is identified with H through this basis, taken positively oriented.
struct Quaternion {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

    Quaternion() = default;
    Quaternion(double a, double b, double c, double d) : x1(a), x2(b), x3(c), x4(d) {}

    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    // q = z1 + z2*j with z1 = x1 + x2 i, z2 = x3 + x4 i.
    static Quaternion from_complex_pair(std::complex<double> z1, std::complex<double> z2) {
        return {z1.real(), z1.imag(), z2.real(), z2.imag()};
    }
    std::complex<double> z1() const { return {x1, x2}; }
    std::complex<double> z2() const { return {x3, x4}; }

    static Quaternion from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
    Vec4 to_vec() const { return Vec4(x1, x2, x3, x4); }

    Quaternion conj() const { return {x1, -x2, -x3, -x4}; }
    double norm2() const { return x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4; }
    double norm() const { return std::sqrt(norm2()); }
    Quaternion imaginary() const { return {0, x2, x3, x4}; }
    bool is_zero(double tol = 0.0) const { return norm2() <= tol * tol; }

    Quaternion operator+(const Quaternion& o) const {
        return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4};
    }
    Quaternion operator-() const { return {-x1, -x2, -x3, -x4}; }
    Quaternion operator*(double s) const { return {x1 * s, x2 * s, x3 * s, x4 * s}; }
    Quaternion operator/(double s) const { return {x1 / s, x2 / s, x3 / s, x4 / s}; }

    // Hamilton product with ij = -ji = k.
    Quaternion operator*(const Quaternion& o) const {
        return {x1 * o.x1 - x2 * o.x2 - x3 * o.x3 - x4 * o.x4,
                x1 * o.x2 + x2 * o.x1 + x3 * o.x4 - x4 * o.x3,
                x1 * o.x3 - x2 * o.x4 + x3 * o.x1 + x4 * o.x2,
                x1 * o.x4 + x2 * o.x3 - x3 * o.x2 + x4 * o.x1};
    }

    Quaternion inverse() const {
        const double n2 = norm2();
        if (n2 == 0.0) throw DomainError("Quaternion::inverse: zero quaternion");
        return conj() / n2;
    }

    Quaternion normalized() const {
        const double n = norm();
        if (n == 0.0) throw DomainError("Quaternion::normalized: zero quaternion");
        return *this / n;
    }
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Phi(q) = q^{-1} i q, the Hopf map H \ {0} -> S^2 of unit imaginary
/// quaternions. Constant on punctured complex lines C* q.
inline Quaternion hopf_phi(const Quaternion& q) {
    if (q.is_zero()) throw DomainError("hopf_phi: zero quaternion");
    const Quaternion r = (q.conj() * Quaternion::i() * q) / q.norm2();
    return r;
}

/// Matrix of x -> u*x on H = R^4 (columns are u*1, u*i, u*j, u*k).
inline Mat4 left_mult_matrix(const Quaternion& u) {
    Mat4 m;
    m.col(0) = (u * Quaternion::one()).to_vec();
    m.col(1) = (u * Quaternion::i()).to_vec();
    m.col(2) = (u * Quaternion::j()).to_vec();
    m.col(3) = (u * Quaternion::k()).to_vec();
    return m;
}

/// Matrix of x -> x*u on H = R^4.
inline Mat4 right_mult_matrix(const Quaternion& u) {
    Mat4 m;
    m.col(0) = (Quaternion::one() * u).to_vec();
    m.col(1) = (Quaternion::i() * u).to_vec();
    m.col(2) = (Quaternion::j() * u).to_vec();
    m.col(3) = (Quaternion::k() * u).to_vec();
    return m;
}

}  // namespace twistor
