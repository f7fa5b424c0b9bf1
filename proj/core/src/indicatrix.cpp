#include "twistor/indicatrix.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

CircleFit fit_circle(const std::vector<Vec2>& pts, int gauss_newton_steps) {
    if (pts.size() < 3) throw PreconditionError("fit_circle: need at least 3 points");
    const int n = static_cast<int>(pts.size());

    // Kasa: minimize |(x^2 + y^2) - 2ax - 2by - c| in the least squares sense.
    Eigen::MatrixXd a(n, 3);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        a(i, 0) = 2 * pts[i][0];
        a(i, 1) = 2 * pts[i][1];
        a(i, 2) = 1.0;
        rhs[i] = pts[i].squaredNorm();
    }
    const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(rhs);
    CircleFit fit;
    fit.center = Vec2(sol[0], sol[1]);
    fit.radius = std::sqrt(std::max(0.0, sol[2] + fit.center.squaredNorm()));

    // Geometric refinement of sum (|p - c| - r)^2.
    for (int step = 0; step < gauss_newton_steps; ++step) {
        if (fit.radius <= 0.0) break;
        Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
        Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
        bool ok = true;
        for (const Vec2& p : pts) {
            const Vec2 d = p - fit.center;
            const double dist = d.norm();
            if (dist < 1e-300) {
                ok = false;
                break;
            }
            const double res = dist - fit.radius;
            const Eigen::Vector3d grad(-d[0] / dist, -d[1] / dist, -1.0);
            jtj += grad * grad.transpose();
            jtr += grad * res;
        }
        if (!ok) break;
        jtj.diagonal().array() += 1e-12;
        const Eigen::Vector3d delta = jtj.ldlt().solve(jtr);
        fit.center -= delta.head<2>();
        fit.radius -= delta[2];
    }

    double ss = 0.0;
    for (const Vec2& p : pts) {
        const double r = (p - fit.center).norm() - fit.radius;
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

Eigen::Vector3d sym_to_r3(const Mat2& s) {
    const double a = s(0, 0), b = 0.5 * (s(0, 1) + s(1, 0)), c = s(1, 1);
    return Eigen::Vector3d((a + c) / std::sqrt(2.0), std::sqrt(2.0) * b, (a - c) / std::sqrt(2.0));
}

IndicatrixReport indicatrix(const FundamentalForms& forms, const Vec2& v, int samples,
                            const DiffConfig& cfg) {
    if (samples < 8) throw PreconditionError("indicatrix: need at least 8 normal samples");
    IndicatrixReport rep;

    const Vec2 a = forms.s3 * v;
    const Vec2 b = forms.s4 * v;
    rep.samples.reserve(samples);
    for (int k = 0; k < samples; ++k) {
        const double t = 2.0 * M_PI * k / samples;
        rep.samples.push_back(std::cos(t) * a + std::sin(t) * b);
    }

    rep.shape_norm = std::sqrt(forms.s3.squaredNorm() + forms.s4.squaredNorm());

    const CircleFit fit = fit_circle(rep.samples);
    rep.center = fit.center;
    rep.center_norm = fit.center.norm();
    rep.radius = fit.radius;
    rep.circularity_residual = fit.radius > 0 ? fit.rms_residual / fit.radius : 0.0;

    const double threshold =
        std::max(cfg.indicatrix_rel_floor * rep.shape_norm, cfg.indicatrix_abs_floor);
    rep.degenerate = fit.radius <= threshold;

    if (!rep.degenerate) {
        // Winding of the sample loop around the origin, against the
        // orientation of the tangent frame; the normal circle is traversed
        // in its cooriented direction by construction.
        double area2 = 0.0;
        for (std::size_t k = 0; k < rep.samples.size(); ++k) {
            const Vec2& p = rep.samples[k];
            const Vec2& q = rep.samples[(k + 1) % rep.samples.size()];
            area2 += p[0] * q[1] - p[1] * q[0];
        }
        rep.spin = area2 >= 0 ? +1 : -1;
        rep.superminimal = rep.center_norm <= IndicatrixReport::kCenterTol * rep.radius &&
                           rep.circularity_residual <= IndicatrixReport::kCircularityTol;
    } else {
        rep.spin = 0;
        rep.superminimal = true;  // the circle may reduce to the origin
    }

    // Full indicatrix I_p in Sym = R^3: cos(t) M3 + sin(t) M4, a centered
    // ellipse classified by the singular values of [M3 | M4].
    const Eigen::Vector3d m3 = sym_to_r3(forms.s3);
    const Eigen::Vector3d m4 = sym_to_r3(forms.s4);
    Eigen::Matrix<double, 3, 2> plane;
    plane.col(0) = m3;
    plane.col(1) = m4;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 3, 2>> svd(plane);
    const double s1 = svd.singularValues()[0], s2 = svd.singularValues()[1];
    rep.planarity_residual = 0.0;  // the curve lies in span(M3, M4) exactly
    if (s1 <= threshold)
        rep.full_shape = IndicatrixShape::Point;
    else if (s2 <= 1e-3 * s1)
        rep.full_shape = IndicatrixShape::Segment;
    else if (std::abs(s1 - s2) <= 1e-3 * s1 && std::abs(m3.dot(m4)) <= 1e-3 * s1 * s1)
        rep.full_shape = IndicatrixShape::Circle;
    else
        rep.full_shape = IndicatrixShape::Ellipse;
    return rep;
}

IndicatrixReport indicatrix(const SurfaceJet& jet, const Vec2& v, int samples,
                            const DiffConfig& cfg) {
    return indicatrix(fundamental_forms(jet), v, samples, cfg);
}

}  // namespace twistor
