// twistorlab: batch verification of the explicit CP^3 -> S^4 twistor
// constructions, Legendrian curve generation, and plot-ready sampling.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/precondition
// error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistor/catalog.hpp"
#include "twistor/error.hpp"
#include "twistor/legendrian.hpp"
#include "twistor/length.hpp"
#include "twistor/lift.hpp"
#include "twistor/indicatrix.hpp"
#include "twistor/report.hpp"
#include "twistor/verify.hpp"
#include "twistor/version.hpp"

namespace {

using namespace twistor;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    if (const char* env = std::getenv("TWISTORLAB_SEED")) return std::strtoull(env, nullptr, 10);
    return 7;
}

struct GridSpec {
    Rect2 rect;
    int n = 21;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    double vals[4];
    int n = 0;
    const int got = std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf,%d", &vals[0], &vals[1], &vals[2],
                                &vals[3], &n);
    if (got != 5 || n < 2 || vals[1] <= vals[0] || vals[3] <= vals[2])
        throw PreconditionError("grid must be umin,umax,vmin,vmax,n with n >= 2");
    g.rect = {vals[0], vals[1], vals[2], vals[3]};
    g.n = n;
    return g;
}

// Coefficient token: integer, fraction n/d, or decimal, with an optional
// trailing i-part (e.g. "1/2", "-3", "0.25", "1+2i", "-1/3i").
bool parse_rational_token(const std::string& tok, Rational& out) {
    long long num = 0, den = 1;
    char extra = 0;
    if (std::sscanf(tok.c_str(), "%lld/%lld%c", &num, &den, &extra) == 2 && den != 0) {
        out = Rational(num, den);
        return true;
    }
    if (std::sscanf(tok.c_str(), "%lld%c", &num, &extra) == 1) {
        out = Rational(num);
        return true;
    }
    return false;
}

struct ParsedPoly {
    PolyQ exact;
    PolyC numeric;
    bool is_exact = true;
};

ParsedPoly parse_poly(const std::string& text) {
    ParsedPoly out;
    std::vector<RationalComplex> exact;
    std::vector<Cx> numeric;
    bool all_exact = true;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        std::string re = token, im;
        const auto pos = token.find_last_of("+-");
        if (!token.empty() && token.back() == 'i') {
            if (pos != std::string::npos && pos > 0) {
                re = token.substr(0, pos);
                im = token.substr(pos, token.size() - pos - 1);
                if (im == "+" || im == "-") im += "1";
            } else {
                re = "0";
                im = token.substr(0, token.size() - 1);
                if (im.empty() || im == "+" || im == "-") im += "1";
            }
        }
        Rational rre, rim;
        if (parse_rational_token(re, rre) && (im.empty() || parse_rational_token(im, rim))) {
            exact.emplace_back(rre, rim);
            numeric.emplace_back(rre.to_double(), rim.to_double());
        } else {
            all_exact = false;
            const auto full_stod = [&](const std::string& s) {
                std::size_t idx = 0;
                double v = 0;
                try {
                    v = std::stod(s, &idx);
                } catch (const std::exception&) {
                    throw PreconditionError("cannot parse coefficient '" + token + "'");
                }
                if (idx != s.size())
                    throw PreconditionError("cannot parse coefficient '" + token + "'");
                return v;
            };
            const double dre = full_stod(re);
            const double dim = im.empty() ? 0.0 : full_stod(im);
            numeric.emplace_back(dre, dim);
        }
    }
    out.is_exact = all_exact;
    if (all_exact) out.exact = PolyQ(std::move(exact));
    out.numeric = PolyC(std::move(numeric), 0.0);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::ios_base::failure("cannot open output path " + path);
    f << text;
    if (!f.good()) throw std::ios_base::failure("write failed for " + path);
}

// --tolerance key=value overrides of the suite defaults; values must be
// positive.
void apply_tolerance_overrides(SuiteConfig& cfg, const std::vector<std::string>& overrides) {
    for (const std::string& text : overrides) {
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw PreconditionError("--tolerance expects key=value, got '" + text + "'");
        const std::string key = text.substr(0, eq);
        double value = 0.0;
        try {
            value = std::stod(text.substr(eq + 1));
        } catch (const std::exception&) {
            throw PreconditionError("--tolerance value in '" + text + "' is not a number");
        }
        if (!(value > 0.0)) throw PreconditionError("--tolerance values must be positive");
        if (key == "conformality") cfg.conformality_tol = value;
        else if (key == "mean_curvature") cfg.mean_curvature_tol = value;
        else if (key == "indicatrix_center") cfg.center_rel_tol = value;
        else if (key == "indicatrix_circularity") cfg.circularity_tol = value;
        else if (key == "lift_chordal") cfg.lift_chordal_tol = value;
        else if (key == "alpha_path") cfg.alpha_path_tol = value;
        else if (key == "cauchy_riemann") cfg.cr_tol = value;
        else if (key == "nabla_f") cfg.nabla_tol = value;
        else if (key == "length") cfg.length_tol = value;
        else throw PreconditionError("unknown tolerance key '" + key + "'");
    }
}

ReportDocument make_document(const std::string& command, std::uint64_t seed) {
    ReportDocument doc;
    doc.tool_version = kToolVersion;
    doc.calibrated_lift_sign = kCalibratedLiftSign;
    doc.config.emplace_back("command", command);
    doc.config.emplace_back("seed", std::to_string(seed));
    return doc;
}

int finish(ReportDocument& doc, const std::string& out_path) {
    const std::string text = report_to_json_string(doc);
    if (out_path.empty())
        std::cout << text;
    else
        write_text(out_path, text);
    int failures = 0;
    for (const auto& r : doc.reports) failures += r.fail_count();
    if (failures > 0) {
        std::cerr << "twistorlab: " << failures << " check(s) failed\n";
        return kExitCheckFailure;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistorlab: verification of the CP^3 -> S^4 twistor constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::uint64_t> seed_opt;
    app.add_option("--seed", seed_opt, "Random seed (fallback: TWISTORLAB_SEED, then 7)");
    std::vector<std::string> tol_overrides;
    app.add_option("--tolerance", tol_overrides,
                   "Override a suite tolerance, key=value (e.g. nabla_f=1e-3)");

    std::string out_path, curve_path, catalog_id, grid_text = "-1,1,-1,1,21";
    std::string p3_text, p4_text, c0_text = "0", path_spec = "equator", point_text = "0,0";
    int samples = 64;
    double param = 0.0;
    bool stereo3d = false;

    auto* check_algebra = app.add_subcommand("check-algebra", "Run the algebra identity suites");
    check_algebra->add_option("--out", out_path, "Write the JSON report here");

    auto* verify_roundtrip =
        app.add_subcommand("verify-roundtrip", "Bryant round-trip verification of a curve file");
    verify_roundtrip->add_option("--curve", curve_path, "Curve JSON file")->required();
    verify_roundtrip->add_option("--grid", grid_text, "umin,umax,vmin,vmax,n");
    verify_roundtrip->add_option("--out", out_path, "Write the JSON report here");

    auto* verify_catalog = app.add_subcommand("verify-catalog", "Verify a catalog surface");
    verify_catalog->add_option("--catalog", catalog_id, "Catalog id")->required();
    verify_catalog->add_option("--param", param, "Catalog parameter (e.g. small sphere radius)");
    verify_catalog->add_option("--out", out_path, "Write the JSON report here");

    auto* verify_h4 = app.add_subcommand("verify-h4", "Verify the hyperbolic model");
    verify_h4->add_option("--out", out_path, "Write the JSON report here");

    auto* gen = app.add_subcommand("gen-legendrian", "Generate a Legendrian curve file");
    gen->add_option("--p3", p3_text, "Comma-separated coefficients of z3")->required();
    gen->add_option("--p4", p4_text, "Comma-separated coefficients of z4")->required();
    gen->add_option("--c0", c0_text, "Constant of integration for z2");
    gen->add_option("--out", out_path, "Curve file to write")->required();

    auto* project = app.add_subcommand("project", "Project a curve and sample the surface");
    project->add_option("--curve", curve_path, "Curve JSON file")->required();
    project->add_option("--grid", grid_text, "umin,umax,vmin,vmax,n");
    project->add_flag("--stereo3d", stereo3d,
                      "Append the first three coordinates of the inverse stereographic chart");
    project->add_option("--out", out_path, "CSV output path")->required();

    auto* indicatrix_cmd = app.add_subcommand("indicatrix", "Sample an indicatrix curve");
    indicatrix_cmd->add_option("--catalog", catalog_id, "Catalog id");
    indicatrix_cmd->add_option("--param", param, "Catalog parameter");
    indicatrix_cmd->add_option("--curve", curve_path, "Curve JSON file");
    indicatrix_cmd->add_option("--point", point_text, "Chart point u,v");
    indicatrix_cmd->add_option("--samples", samples, "Normal-angle sample count");
    indicatrix_cmd->add_option("--out", out_path, "CSV output path")->required();

    auto* sample_metric = app.add_subcommand("sample-metric", "Length diagnostics along a path");
    sample_metric->add_option("--catalog", catalog_id, "Catalog id")->required();
    sample_metric->add_option("--param", param, "Catalog parameter");
    sample_metric->add_option("--path", path_spec, "equator | radial,r | circle,r");
    sample_metric->add_option("--out", out_path, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    const std::uint64_t seed = seed_or_env(seed_opt);
    SuiteConfig cfg;
    cfg.seed = seed;

    try {
        apply_tolerance_overrides(cfg, tol_overrides);
        if (check_algebra->parsed()) {
            ReportDocument doc = make_document("check-algebra", seed);
            doc.reports.push_back(algebra_suite(cfg));
            doc.reports.push_back(maps_suite(cfg));
            doc.reports.push_back(group_suite(cfg));
            return finish(doc, out_path);
        }

        if (verify_roundtrip->parsed()) {
            const GridSpec grid = parse_grid(grid_text);
            cfg.grid_n = grid.n;
            const NumericCurve curve = load_curve(curve_path);
            if (!curve.certified)
                throw PreconditionError("curve file failed Legendrian certification");
            ReportDocument doc = make_document("verify-roundtrip", seed);
            doc.config.emplace_back("curve", curve_path);
            doc.config.emplace_back("grid", grid_text);
            doc.reports.push_back(roundtrip_suite(curve, grid.rect, cfg, curve_path));
            return finish(doc, out_path);
        }

        if (verify_catalog->parsed()) {
            ReportDocument doc = make_document("verify-catalog", seed);
            doc.config.emplace_back("catalog", catalog_id);
            doc.reports.push_back(catalog_suite(catalog_id, cfg, param));
            return finish(doc, out_path);
        }

        if (verify_h4->parsed()) {
            ReportDocument doc = make_document("verify-h4", seed);
            doc.reports.push_back(h4_suite(cfg));
            doc.reports.push_back(metric_suite(cfg));
            return finish(doc, out_path);
        }

        if (gen->parsed()) {
            const ParsedPoly p3 = parse_poly(p3_text);
            const ParsedPoly p4 = parse_poly(p4_text);
            const ParsedPoly c0 = parse_poly(c0_text);
            NumericCurve curve;
            if (p3.is_exact && p4.is_exact && c0.is_exact) {
                const ExactCurve exact =
                    generate_legendrian(p3.exact, p4.exact, c0.exact.coeff(0));
                curve = to_numeric(exact);
            } else {
                curve = generate_legendrian(p3.numeric, p4.numeric, c0.numeric.coeff(0));
            }
            save_curve(curve, out_path);
            std::cout << "wrote " << out_path << (curve.certified ? " (certified)" : "") << "\n";
            return kExitPass;
        }

        if (project->parsed()) {
            const GridSpec grid = parse_grid(grid_text);
            const NumericCurve curve = load_curve(curve_path);
            if (!curve.certified)
                throw PreconditionError("curve file failed Legendrian certification");
            Rect2 inflated = grid.rect;
            const double mu = 0.05 * (grid.rect.umax - grid.rect.umin);
            const double mv = 0.05 * (grid.rect.vmax - grid.rect.vmin);
            inflated = {grid.rect.umin - mu, grid.rect.umax + mu, grid.rect.vmin - mv,
                        grid.rect.vmax + mv};
            const ParamSurface surf = project_curve(curve, inflated);
            std::string csv = surface_csv_header();
            if (stereo3d) csv += ",s1,s2,s3";
            csv += "\n";
            for (const auto& row : sample_surface(surf, grid.rect, grid.n, cfg)) {
                csv += surface_csv_row(row);
                if (stereo3d) {
                    Vec5 x;
                    for (int k = 0; k < 5; ++k) x[k] = row.x[k];
                    const R4OrInf s = stereo_s4_inverse(SpherePoint(x));
                    for (int k = 0; k < 3; ++k)
                        csv += "," + (s.infinite ? std::string("nan") : format_double(s.x[k]));
                }
                csv += "\n";
            }
            write_text(out_path, csv);
            return kExitPass;
        }

        if (indicatrix_cmd->parsed()) {
            if (catalog_id.empty() == curve_path.empty())
                throw PreconditionError("indicatrix: give exactly one of --catalog or --curve");
            ParamSurface surf;
            if (!catalog_id.empty()) {
                surf = make_catalog_surface(catalog_id, param);
            } else {
                const NumericCurve curve = load_curve(curve_path);
                if (!curve.certified)
                    throw PreconditionError("curve file failed Legendrian certification");
                surf = project_curve(curve, Rect2{-1.1, 1.1, -1.1, 1.1});
            }
            Vec2 p(0, 0);
            if (std::sscanf(point_text.c_str(), "%lf,%lf", &p[0], &p[1]) != 2)
                throw PreconditionError("indicatrix: --point must be u,v");
            const SurfaceJet jet = differentiate(surf, p, cfg.diff);
            const IndicatrixReport rep = indicatrix(jet, Vec2(1, 0), samples, cfg.diff);
            std::string csv = "sample,y1,y2\n";
            for (std::size_t k = 0; k < rep.samples.size(); ++k)
                csv += std::to_string(k) + "," + format_double(rep.samples[k][0]) + "," +
                       format_double(rep.samples[k][1]) + "\n";
            csv += "# center_norm=" + format_double(rep.center_norm) +
                   " radius=" + format_double(rep.radius) +
                   " circularity=" + format_double(rep.circularity_residual) +
                   " spin=" + std::to_string(rep.spin) +
                   " degenerate=" + std::to_string(rep.degenerate ? 1 : 0) + "\n";
            write_text(out_path, csv);
            return kExitPass;
        }

        if (sample_metric->parsed()) {
            ReportDocument doc = make_document("sample-metric", seed);
            doc.config.emplace_back("catalog", catalog_id);
            doc.config.emplace_back("path", path_spec);
            const ParamSurface surf = make_catalog_surface(catalog_id, param);
            CheckReport rep;
            rep.name = "path_length";
            double r = 0.0;
            if (path_spec == "equator") {
                const ChartPath path = [](double t) {
                    return Vec2(std::cos(2 * M_PI * t), std::sin(2 * M_PI * t));
                };
                const double len = intrinsic_length(surf, path, cfg.diff);
                rep.add("equator_length", std::abs(len - 2 * M_PI), cfg.length_tol);
                rep.note("length", format_double(len));
            } else if (std::sscanf(path_spec.c_str(), "radial,%lf", &r) == 1) {
                const ChartPath path = [r](double t) { return Vec2(r * t, 0.0); };
                const double len = intrinsic_length(surf, path, cfg.diff);
                rep.note("length", format_double(len));
                if (surf.target == Target::Ball)
                    rep.add("radial_length_vs_2atanh", std::abs(len - 2 * std::atanh(r)),
                            cfg.length_tol);
            } else if (std::sscanf(path_spec.c_str(), "circle,%lf", &r) == 1) {
                const ChartPath path = [r](double t) {
                    return Vec2(r * std::cos(2 * M_PI * t), r * std::sin(2 * M_PI * t));
                };
                rep.note("length", format_double(intrinsic_length(surf, path, cfg.diff)));
            } else {
                throw PreconditionError("sample-metric: unknown path spec '" + path_spec + "'");
            }
            doc.reports.push_back(rep);
            return finish(doc, out_path);
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "twistorlab: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const PreconditionError& e) {
        std::cerr << "twistorlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "twistorlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "twistorlab: error: " << e.what() << "\n";
        return kExitCheckFailure;
    }

    return kExitUsage;
}
