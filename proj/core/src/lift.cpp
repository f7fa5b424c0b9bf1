#include "twistor/lift.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

namespace {

Mat5 plane_structure_matrix(const SurfaceJet& jet, int sign) {
    // Euclidean-unit frame vectors; conformal scaling cancels in the outer
    // products only for lambda = 1, so rescale explicitly.
    const double lam = jet.conformal_factor;
    const Vec5 e1 = jet.e1 * lam, e2 = jet.e2 * lam, n3 = jet.n3 * lam, n4 = jet.n4 * lam;
    return e2 * e1.transpose() - e1 * e2.transpose() +
           sign * (n4 * n3.transpose() - n3 * n4.transpose());
}

Vec4c aligned_unit_rep(const ProjectivePoint& base, const ProjectivePoint& other) {
    Vec4c u = other.z / other.z.norm();
    const Vec4c b = base.z / base.z.norm();
    const Cx inner = fs_inner(u, b);
    const double m = std::abs(inner);
    if (m > 1e-14) u *= std::conj(inner) / m;
    return u;
}

}  // namespace

TangentStructure plane_structure_field(const ParamSurface& s, const Vec2& p, int sign,
                                       const DiffConfig& cfg) {
    if (sign != 1 && sign != -1) throw PreconditionError("plane_structure_field: sign must be +-1");
    const SurfaceJet jet = differentiate(s, p, cfg);
    TangentStructure t;
    if (s.target == Target::Sphere) t.base = SpherePoint(jet.f);
    t.j = plane_structure_matrix(jet, sign);
    return t;
}

LiftResult twistor_lift(const ParamSurface& s, const Vec2& p, int sign, const DiffConfig& cfg) {
    if (s.target != Target::Sphere)
        throw PreconditionError("twistor_lift: surface must map into S^4");
    if (sign != 1 && sign != -1) throw PreconditionError("twistor_lift: sign must be +-1");

    const SurfaceJet jet = differentiate(s, p, cfg);
    const FundamentalForms forms = fundamental_forms(jet);
    if (forms.conformality_residual > cfg.conformality_tol)
        throw PreconditionError("twistor_lift: immersion is not conformal at the chart point");

    LiftResult out;
    out.conformality_residual = forms.conformality_residual;
    out.structure.base = SpherePoint(jet.f);
    out.structure.j = plane_structure_matrix(jet, sign);
    out.point = point_from_structure(out.structure, sign);

    // df o I = J o df with I the chart rotation du -> dv.
    const double scale = std::max(jet.fu.norm(), jet.fv.norm());
    const double r1 = (out.structure.j * jet.fu - jet.fv).norm();
    const double r2 = (out.structure.j * jet.fv + jet.fu).norm();
    out.eq_intertwine_residual = std::max(r1, r2) / scale;
    return out;
}

double lift_alpha_residual(const ParamSurface& s, const Vec2& p, int sign, const Vec2& w,
                           const DiffConfig& cfg) {
    const double h = cfg.step_for(s.domain);
    const Vec2 dir = w.normalized();
    const ProjectivePoint z0 = twistor_lift(s, p, sign, cfg).point;
    const ProjectivePoint zp = twistor_lift(s, p + h * dir, sign, cfg).point;
    const ProjectivePoint zm = twistor_lift(s, p - h * dir, sign, cfg).point;

    const Vec4c u0 = z0.z / z0.z.norm();
    const Vec4c up = aligned_unit_rep(z0, zp);
    const Vec4c um = aligned_unit_rep(z0, zm);
    const Vec4c vel = (up - um) / (2 * h);
    const Vec4c vperp = vel - fs_inner(vel, u0) * u0;
    const double speed = vperp.norm();
    if (speed < 1e-14) return 0.0;
    return std::abs(alpha_form(u0, vel)) / speed;
}

double lift_cr_residual(const ParamSurface& s, const Vec2& p, int sign, const DiffConfig& cfg) {
    const double h = cfg.step_for(s.domain);
    const ProjectivePoint z0 = twistor_lift(s, p, sign, cfg).point;
    const auto diff = [&](const Vec2& dir) {
        const Vec4c up = aligned_unit_rep(z0, twistor_lift(s, p + h * dir, sign, cfg).point);
        const Vec4c um = aligned_unit_rep(z0, twistor_lift(s, p - h * dir, sign, cfg).point);
        return Vec4c((up - um) / (2 * h));
    };
    const Vec4c hu = horizontal_component(z0, diff(Vec2(1, 0)));
    const Vec4c hv = horizontal_component(z0, diff(Vec2(0, 1)));
    const double scale = hu.norm() + hv.norm();
    if (scale < 1e-14) return 0.0;
    return (hv - Cx(0, 1) * hu).norm() / scale;
}

double covariant_derivative_residual(const ParamSurface& s, const Vec2& p, int sign,
                                     const DiffConfig& cfg) {
    if (s.target == Target::Ball)
        throw PreconditionError("covariant_derivative_residual: sphere or flat targets only");
    const double h = cfg.step_for(s.domain);
    const SurfaceJet jet0 = differentiate(s, p, cfg);

    const auto tangent_project = [&](const Vec5& base, const Vec5& v) -> Vec5 {
        if (s.target == Target::Sphere) return v - v.dot(base) * base;
        Vec5 w = v;
        w[4] = 0.0;
        return w;
    };

    const Vec5 seeds[4] = {jet0.e1, jet0.e2, jet0.n3, jet0.n4};
    double worst = 0.0;
    for (const Vec2& dir : {Vec2(1, 0), Vec2(0, 1)}) {
        const Vec2 pp = p + h * dir, pm = p - h * dir;
        const SurfaceJet jp = differentiate(s, pp, cfg), jm = differentiate(s, pm, cfg);
        const Mat5 f0 = plane_structure_matrix(jet0, sign);
        const Mat5 fp = plane_structure_matrix(jp, sign);
        const Mat5 fm = plane_structure_matrix(jm, sign);
        const double speed = (jet0.fu * dir[0] + jet0.fv * dir[1]).norm();

        for (const Vec5& seed : seeds) {
            const Vec5 u0 = tangent_project(jet0.f, seed);
            const Vec5 up = tangent_project(jp.f, seed);
            const Vec5 um = tangent_project(jm.f, seed);
            const Vec5 du = tangent_project(jet0.f, (up - um) / (2 * h));
            const Vec5 dfu = tangent_project(jet0.f, (fp * up - fm * um) / (2 * h));
            const Vec5 r = dfu - f0 * du;
            const double n = u0.norm();
            if (n < 1e-8) continue;
            worst = std::max(worst, r.norm() / (n * speed));
        }
    }
    return worst;
}

}  // namespace twistor
