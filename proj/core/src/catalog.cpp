#include "twistor/catalog.hpp"

#include <cmath>

#include "twistor/error.hpp"

namespace twistor {

namespace {

Vec5 embed4(double a, double b, double c, double d) {
    Vec5 v;
    v << a, b, c, d, 0.0;
    return v;
}

// Inverse stereographic chart of the unit 2-sphere.
Eigen::Vector3d unit_s2(double u, double v) {
    const double r2 = u * u + v * v;
    return Eigen::Vector3d(2 * u, 2 * v, 1 - r2) / (1 + r2);
}

ParamSurface totally_geodesic_s2() {
    ParamSurface s;
    s.target = Target::Sphere;
    s.domain = {-1.5, 1.5, -1.5, 1.5};
    s.catalog_id = "totally_geodesic_s2";
    s.eval = [](double u, double v) {
        const double r2 = u * u + v * v;
        Vec5 x;
        x << 2 * u / (1 + r2), 2 * v / (1 + r2), 0.0, 0.0, (1 - r2) / (1 + r2);
        return x;
    };
    return s;
}

ParamSurface small_sphere(double r) {
    if (!(r > 0.0 && r < M_PI / 2))
        throw DomainError("small_sphere: radius must lie in (0, pi/2)");
    ParamSurface s;
    s.target = Target::Sphere;
    s.domain = {-1.2, 1.2, -1.2, 1.2};
    s.catalog_id = "small_sphere";
    const double sr = std::sin(r), cr = std::cos(r);
    s.eval = [sr, cr](double u, double v) {
        const Eigen::Vector3d n = unit_s2(u, v);
        Vec5 x;
        x << sr * n[0], sr * n[1], sr * n[2], 0.0, cr;
        return x;
    };
    return s;
}

ParamSurface flat_graph() {
    ParamSurface s;
    s.target = Target::Flat;
    s.domain = {-1, 1, -1, 1};
    s.catalog_id = "flat_graph";
    s.eval = [](double u, double v) { return embed4(u, v, u * u, v * v); };
    return s;
}

ParamSurface flat_complex_line() {
    ParamSurface s;
    s.target = Target::Flat;
    s.domain = {-1, 1, -1, 1};
    s.catalog_id = "flat_complex_line";
    s.eval = [](double u, double v) { return embed4(u, v, 0.0, 0.0); };
    return s;
}

// Classical degree-2 minimal immersion of the sphere of radius sqrt(3).
ParamSurface veronese() {
    ParamSurface s;
    s.target = Target::Sphere;
    s.domain = {-1.2, 1.2, -1.2, 1.2};
    s.catalog_id = "veronese";
    s.eval = [](double u, double v) {
        const Eigen::Vector3d p = std::sqrt(3.0) * unit_s2(u, v);
        const double x = p[0], y = p[1], z = p[2];
        const double s3 = std::sqrt(3.0);
        Vec5 w;
        w << x * y / s3, x * z / s3, y * z / s3, (x * x - y * y) / (2 * s3),
            (x * x + y * y - 2 * z * z) / 6.0;
        return w;
    };
    return s;
}

ParamSurface hyperbolic_plane() {
    ParamSurface s;
    s.target = Target::Ball;
    s.domain = {-0.9995, 0.9995, -0.9995, 0.9995};
    s.catalog_id = "hyperbolic_plane";
    s.eval = [](double u, double v) { return embed4(u, v, 0.0, 0.0); };
    return s;
}

}  // namespace

ParamSurface make_catalog_surface(const std::string& id, double param) {
    if (id == "totally_geodesic_s2") return totally_geodesic_s2();
    if (id == "small_sphere") return small_sphere(param > 0 ? param : M_PI / 4);
    if (id == "flat_graph") return flat_graph();
    if (id == "flat_complex_line") return flat_complex_line();
    if (id == "veronese") return veronese();
    if (id == "hyperbolic_plane") return hyperbolic_plane();
    throw DomainError("make_catalog_surface: unknown catalog id '" + id + "'");
}

ParamSurface make_legendrian_projection(const NumericCurve& curve, const Rect2& grid) {
    return project_curve(curve, grid);
}

std::vector<std::string> catalog_ids() {
    return {"totally_geodesic_s2", "small_sphere",     "flat_graph",
            "flat_complex_line",   "veronese",         "hyperbolic_plane"};
}

}  // namespace twistor
