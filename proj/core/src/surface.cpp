#include "twistor/surface.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "twistor/error.hpp"
#include "twistor/hyperbolic.hpp"

namespace twistor {

double metric_dot(const SurfaceJet& jet, const Vec5& a, const Vec5& b) {
    const double lam = jet.conformal_factor;
    return lam * lam * a.dot(b);
}

double metric_norm(const SurfaceJet& jet, const Vec5& a) {
    return std::sqrt(std::max(0.0, metric_dot(jet, a, a)));
}

namespace {

Vec5 project_sphere_tangent(const Vec5& x, const Vec5& v) { return v - v.dot(x) * x; }

// Projects an ambient seed onto the target's tangent space at f.
Vec5 target_tangent(Target target, const Vec5& f, const Vec5& v) {
    if (target == Target::Sphere) return project_sphere_tangent(f, v);
    Vec5 w = v;
    w[4] = 0.0;
    return w;
}

struct Stencil {
    Vec5 d1;   // first derivative
    Vec5 d2;   // pure second derivative
};

}  // namespace

SurfaceJet differentiate(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg) {
    const double h = cfg.step_for(s.domain);
    if (!s.domain.contains(p[0], p[1], 2.0 * h))
        throw DomainError("differentiate: chart point violates the 2h boundary margin");

    const auto f = [&](double du, double dv) { return s(p[0] + du, p[1] + dv); };
    const Vec5 f0 = f(0, 0);

    const bool richardson = cfg.richardson_order >= 2;
    const auto central = [&](int axis, double step) -> Stencil {
        const Vec5 fp = axis == 0 ? f(step, 0) : f(0, step);
        const Vec5 fm = axis == 0 ? f(-step, 0) : f(0, -step);
        return {(fp - fm) / (2 * step), (fp - 2 * f0 + fm) / (step * step)};
    };
    const auto mixed = [&](double step) -> Vec5 {
        return (f(step, step) - f(step, -step) - f(-step, step) + f(-step, -step)) /
               (4 * step * step);
    };

    SurfaceJet jet;
    jet.target = s.target;
    jet.orientation = s.orientation;
    jet.p = p;
    jet.f = f0;

    for (int axis = 0; axis < 2; ++axis) {
        const Stencil a = central(axis, h);
        Vec5 d1 = a.d1, d2 = a.d2;
        if (richardson) {
            const Stencil b = central(axis, h / 2);
            d1 = (4 * b.d1 - a.d1) / 3;
            d2 = (4 * b.d2 - a.d2) / 3;
        }
        (axis == 0 ? jet.fu : jet.fv) = d1;
        (axis == 0 ? jet.fuu : jet.fvv) = d2;
    }
    {
        const Vec5 a = mixed(h);
        jet.fuv = richardson ? Vec5((4 * mixed(h / 2) - a) / 3) : a;
    }

    if (s.target == Target::Sphere) {
        jet.fuu = project_sphere_tangent(f0, jet.fuu);
        jet.fuv = project_sphere_tangent(f0, jet.fuv);
        jet.fvv = project_sphere_tangent(f0, jet.fvv);
    } else if (s.target == Target::Ball) {
        jet.conformal_factor = hyperbolic_conformal_factor(f0.head<4>());
    }

    // Immersion check on the Jacobian.
    Eigen::Matrix<double, 5, 2> jac;
    jac.col(0) = jet.fu;
    jac.col(1) = jet.fv;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 5, 2>> svd(jac);
    const double smax = svd.singularValues()[0], smin = svd.singularValues()[1];
    if (!(smax > 0.0) || smin / smax < cfg.immersion_tol)
        throw ImmersionError("differentiate: rank-deficient Jacobian at the chart point");

    // Euclidean-orthonormal tangent frame and its chart coefficients.
    const double a11 = jet.fu.norm();
    const Vec5 t1 = jet.fu / a11;
    const double proj = jet.fv.dot(t1);
    const Vec5 w = jet.fv - proj * t1;
    const double a22 = w.norm();
    const Vec5 t2 = w / a22;
    Mat2 coeffs;
    coeffs << 1.0 / a11, 0.0, -proj / (a11 * a22), 1.0 / a22;

    const double lam = jet.conformal_factor;
    jet.e1 = t1 / lam;
    jet.e2 = t2 / lam;
    jet.tangent_coeffs = coeffs / lam;

    // Normal completion inside the target's tangent space, seeds ordered by
    // projected size so the choice is deterministic.
    std::vector<Vec5> candidates;
    for (int i = 0; i < 5; ++i) {
        Vec5 seed = target_tangent(s.target, f0, Vec5::Unit(i));
        seed -= seed.dot(t1) * t1;
        seed -= seed.dot(t2) * t2;
        candidates.push_back(seed);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Vec5& a, const Vec5& b) { return a.norm() > b.norm(); });
    Vec5 m3 = Vec5::Zero(), m4 = Vec5::Zero();
    int found = 0;
    for (const Vec5& cand : candidates) {
        Vec5 v = cand;
        if (found == 1) v -= v.dot(m3) * m3;
        if (v.norm() < 1e-6) continue;
        (found == 0 ? m3 : m4) = v.normalized();
        if (++found == 2) break;
    }
    if (found < 2) throw ImmersionError("differentiate: could not complete the normal frame");

    // Outward-normal-first orientation convention; flip n4 to match the
    // target orientation flag.
    double det;
    if (s.target == Target::Sphere) {
        Mat5 b;
        b.col(0) = f0;
        b.col(1) = t1;
        b.col(2) = t2;
        b.col(3) = m3;
        b.col(4) = m4;
        det = b.determinant();
    } else {
        Mat4 b;
        b.col(0) = t1.head<4>();
        b.col(1) = t2.head<4>();
        b.col(2) = m3.head<4>();
        b.col(3) = m4.head<4>();
        det = b.determinant();
    }
    if (det * s.orientation < 0) m4 = -m4;

    jet.n3 = m3 / lam;
    jet.n4 = m4 / lam;
    return jet;
}

FundamentalForms fundamental_forms(const SurfaceJet& jet) {
    FundamentalForms out;
    const double e = metric_dot(jet, jet.fu, jet.fu);
    const double f = metric_dot(jet, jet.fu, jet.fv);
    const double g = metric_dot(jet, jet.fv, jet.fv);
    out.first << e, f, f, g;
    if (!(e + g > 0.0)) throw ImmersionError("fundamental_forms: degenerate first form");
    out.conformality_residual = (std::abs(e - g) + 2 * std::abs(f)) / (e + g);

    // Second derivatives corrected to covariant ones where needed, then
    // paired with the unit normals through g(V, n) = lam^2 <V, n>.
    Vec5 hess[2][2] = {{jet.fuu, jet.fuv}, {jet.fuv, jet.fvv}};
    if (jet.target == Target::Ball) {
        const Vec4 x = jet.f.head<4>();
        const Vec4 wlog = 2.0 * x / (1.0 - x.squaredNorm());  // grad log lambda
        const Vec4 d[2] = {jet.fu.head<4>(), jet.fv.head<4>()};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Vec4 gamma =
                    d[i].dot(wlog) * d[j] + d[j].dot(wlog) * d[i] - d[i].dot(d[j]) * wlog;
                hess[i][j].head<4>() += gamma;
            }
    }

    const Mat2& c = jet.tangent_coeffs;
    const double lam2 = jet.conformal_factor * jet.conformal_factor;
    Mat2 x3 = Mat2::Zero(), x4 = Mat2::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            x3(i, j) = lam2 * hess[i][j].dot(jet.n3);
            x4(i, j) = lam2 * hess[i][j].dot(jet.n4);
        }
    out.s3 = c * x3 * c.transpose();
    out.s4 = c * x4 * c.transpose();
    return out;
}

Vec5 mean_curvature(const SurfaceJet& jet, const FundamentalForms& forms) {
    return 0.5 * (forms.s3.trace() * jet.n3 + forms.s4.trace() * jet.n4);
}

Vec5 mean_curvature(const SurfaceJet& jet) { return mean_curvature(jet, fundamental_forms(jet)); }

}  // namespace twistor
