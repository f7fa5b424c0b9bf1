#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "twistor/rational.hpp"

namespace twistor {

namespace poly_detail {

inline bool coeff_is_zero(const RationalComplex& c, double) { return c.is_zero(); }
inline bool coeff_is_zero(const std::complex<double>& c, double tol) { return std::abs(c) <= tol; }

inline RationalComplex coeff_div_int(const RationalComplex& c, std::int64_t k) { return c.div_int(k); }
inline std::complex<double> coeff_div_int(const std::complex<double>& c, std::int64_t k) {
    return c / static_cast<double>(k);
}

inline RationalComplex coeff_mul_int(const RationalComplex& c, std::int64_t k) {
    return c * RationalComplex(Rational(k));
}
inline std::complex<double> coeff_mul_int(const std::complex<double>& c, std::int64_t k) {
    return c * static_cast<double>(k);
}

}  // namespace poly_detail

/// Univariate polynomial with ascending coefficients. The coefficient type is
/// either RationalComplex (exact) or std::complex<double>; trailing zeros are
/// trimmed (exactly, or against the given tolerance).
template <typename C>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs, double trim_tol = 0.0) : c_(std::move(coeffs)) {
        trim(trim_tol);
    }
    static Poly constant(C v) { return Poly(std::vector<C>{v}); }
    static Poly zero() { return Poly(); }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C{});
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C{});
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<C> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = poly_detail::coeff_mul_int(c_[k], static_cast<std::int64_t>(k));
        return Poly(std::move(r));
    }

    /// Exact antiderivative with the constant term fixed to c0.
    Poly antiderivative(C c0) const {
        std::vector<C> r(c_.size() + 1, C{});
        r[0] = c0;
        for (std::size_t k = 0; k < c_.size(); ++k)
            r[k + 1] = poly_detail::coeff_div_int(c_[k], static_cast<std::int64_t>(k + 1));
        return Poly(std::move(r));
    }

    std::complex<double> eval(std::complex<double> t) const {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + to_cx(c_[k]);
        return acc;
    }

private:
    static std::complex<double> to_cx(const RationalComplex& v) { return v.to_complex(); }
    static std::complex<double> to_cx(const std::complex<double>& v) { return v; }

    void trim(double tol) {
        while (!c_.empty() && poly_detail::coeff_is_zero(c_.back(), tol)) c_.pop_back();
    }

    std::vector<C> c_;
};

using PolyQ = Poly<RationalComplex>;
using PolyC = Poly<std::complex<double>>;

inline PolyC to_double_poly(const PolyQ& p) {
    std::vector<std::complex<double>> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_complex();
    return PolyC(std::move(c));
}

}  // namespace twistor
