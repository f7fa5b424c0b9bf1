#include "twistor/legendrian.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "twistor/error.hpp"
#include "twistor/projective.hpp"
#include "twistor/sphere4.hpp"

namespace twistor {

bool certify_curve(const CurveT<RationalComplex>& c) { return alpha_pullback(c).is_zero(); }

bool certify_curve(const CurveT<std::complex<double>>& c) {
    double scale = 0.0;
    for (const PolyC* p : {&c.z1, &c.z2, &c.z3, &c.z4})
        for (const auto& coeff : p->coeffs()) scale = std::max(scale, std::abs(coeff));
    const PolyC pullback = alpha_pullback(c);
    double worst = 0.0;
    for (const auto& coeff : pullback.coeffs()) worst = std::max(worst, std::abs(coeff));
    return worst <= 1e-13 * std::max(1.0, scale * scale);
}

NumericCurve to_numeric(const ExactCurve& c) {
    NumericCurve n;
    n.z1 = to_double_poly(c.z1);
    n.z2 = to_double_poly(c.z2);
    n.z3 = to_double_poly(c.z3);
    n.z4 = to_double_poly(c.z4);
    n.p3 = to_double_poly(c.p3);
    n.p4 = to_double_poly(c.p4);
    n.c0 = c.c0.to_complex();
    n.generated = c.generated;
    n.certified = c.certified;
    return n;
}

Vec4c curve_eval(const NumericCurve& c, Cx t) {
    return Vec4c(c.z1.eval(t), c.z2.eval(t), c.z3.eval(t), c.z4.eval(t));
}

Vec4c curve_derivative(const NumericCurve& c, Cx t) {
    return Vec4c(c.z1.derivative().eval(t), c.z2.derivative().eval(t), c.z3.derivative().eval(t),
                 c.z4.derivative().eval(t));
}

ParamSurface project_holomorphic_curve(const NumericCurve& c, const Rect2& grid,
                                       std::string catalog_id) {
    ParamSurface s;
    s.target = Target::Sphere;
    s.domain = grid;
    s.catalog_id = std::move(catalog_id);
    s.eval = [c](double u, double v) -> Vec5 {
        const Vec4c z = curve_eval(c, Cx(u, v));
        if (z.norm() < 1e-140) throw DomainError("projected curve: Z vanishes on the grid");
        return twistor_project(ProjectivePoint(z)).x;
    };
    return s;
}

ParamSurface project_curve(const NumericCurve& c, const Rect2& grid) {
    if (!c.certified)
        throw PreconditionError("project_curve: curve is not a certified Legendrian curve");
    return project_holomorphic_curve(c, grid, "legendrian_projection");
}

RankProbe projection_rank_probe(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg) {
    const double h = cfg.step_for(s.domain);
    Eigen::Matrix<double, 5, 2> jac;
    jac.col(0) = (s(p[0] + h, p[1]) - s(p[0] - h, p[1])) / (2 * h);
    jac.col(1) = (s(p[0], p[1] + h) - s(p[0], p[1] - h)) / (2 * h);
    const Eigen::JacobiSVD<Eigen::Matrix<double, 5, 2>> svd(jac);
    RankProbe probe;
    probe.sigma_max = svd.singularValues()[0];
    probe.ratio = probe.sigma_max > 0.0 ? svd.singularValues()[1] / probe.sigma_max : 0.0;
    return probe;
}

bool branch_masked(const ParamSurface& s, const Vec2& p, const DiffConfig& cfg) {
    const RankProbe probe = projection_rank_probe(s, p, cfg);
    return probe.ratio < kBranchMaskRatio || probe.sigma_max < kBranchMaskAbsolute;
}

namespace {

using nlohmann::ordered_json;

ordered_json poly_to_json(const PolyC& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

PolyC poly_from_json(const ordered_json& arr) {
    std::vector<Cx> coeffs;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw PreconditionError("curve file: coefficients must be [re, im] pairs");
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return PolyC(std::move(coeffs), 0.0);
}

ordered_json curve_json(const NumericCurve& c) {
    ordered_json j;
    j["chart"] = "z1";
    j["c0"] = {c.c0.real(), c.c0.imag()};
    j["p3"] = poly_to_json(c.p3);
    j["p4"] = poly_to_json(c.p4);
    j["z2"] = poly_to_json(c.z2);
    return j;
}

}  // namespace

std::string curve_to_json_string(const NumericCurve& c) { return curve_json(c).dump(2) + "\n"; }

std::string curve_to_json_string(const ExactCurve& c) {
    return curve_to_json_string(to_numeric(c));
}

NumericCurve curve_from_json_string(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.value("chart", "") != std::string("z1"))
        throw PreconditionError("curve file: unsupported chart");
    NumericCurve c;
    const auto& c0 = j.at("c0");
    c.c0 = Cx(c0.at(0).get<double>(), c0.at(1).get<double>());
    c.p3 = poly_from_json(j.at("p3"));
    c.p4 = poly_from_json(j.at("p4"));
    c.z1 = PolyC::constant(Cx(1, 0));
    c.z3 = c.p3;
    c.z4 = c.p4;
    // The stored z2 is authoritative; certification is re-derived from it.
    c.z2 = poly_from_json(j.at("z2"));
    c.generated = true;
    c.certified = certify_curve(c);
    return c;
}

void save_curve(const NumericCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("save_curve: cannot open " + path);
    out << curve_to_json_string(c);
    if (!out.good()) throw std::ios_base::failure("save_curve: write failed for " + path);
}

NumericCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("load_curve: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return curve_from_json_string(text);
}

}  // namespace twistor
