#include "twistor/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace twistor {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string report_to_json_string(const ReportDocument& doc) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["tool_version"] = doc.tool_version;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : doc.config) cfg[k] = v;
    j["config"] = cfg;
    j["calibration"] = {{"lift_sign", doc.calibrated_lift_sign}};

    int pass = 0, fail = 0;
    ordered_json reports = ordered_json::array();
    for (const auto& r : doc.reports) {
        ordered_json jr;
        jr["name"] = r.name;
        ordered_json meta = ordered_json::object();
        for (const auto& [k, v] : r.metadata) meta[k] = v;
        jr["metadata"] = meta;
        ordered_json entries = ordered_json::array();
        for (const auto& e : r.entries) {
            entries.push_back({{"id", e.id},
                               {"residual", format_double(e.residual)},
                               {"tolerance", format_double(e.tolerance)},
                               {"pass", e.pass}});
            (e.pass ? pass : fail) += 1;
        }
        jr["entries"] = entries;
        jr["all_pass"] = r.all_pass();
        reports.push_back(jr);
    }
    j["reports"] = reports;
    j["summary"] = {{"pass", pass}, {"fail", fail}, {"total", pass + fail}};
    return j.dump(2) + "\n";
}

std::string surface_csv_header() {
    return "u,v,x1,x2,x3,x4,x5,conf_res,mean_curv,ind_center,ind_radius,ind_circ_res,spin";
}

std::string surface_csv_row(const SurfaceSampleRow& r) {
    std::string out = format_double(r.u) + "," + format_double(r.v);
    for (double c : r.x) out += "," + format_double(c);
    if (r.masked) {
        out += ",nan,nan,nan,nan,nan,0";
        return out;
    }
    out += "," + format_double(r.conf_res);
    out += "," + format_double(r.mean_curv);
    out += "," + format_double(r.ind_center);
    out += "," + format_double(r.ind_radius);
    out += "," + format_double(r.ind_circ_res);
    out += "," + std::to_string(r.spin);
    return out;
}

}  // namespace twistor
