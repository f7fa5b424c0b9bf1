#pragma once

#include <string>
#include <utility>
#include <vector>

namespace twistor {

struct CheckEntry {
    std::string id;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Named residuals with tolerances and verdicts, plus free-form metadata.
struct CheckReport {
    std::string name;
    std::vector<CheckEntry> entries;
    std::vector<std::pair<std::string, std::string>> metadata;

    void add(const std::string& id, double residual, double tolerance) {
        entries.push_back({id, residual, tolerance, residual <= tolerance});
    }
    void add_verdict(const std::string& id, bool pass) {
        entries.push_back({id, pass ? 0.0 : 1.0, 0.5, pass});
    }
    void note(const std::string& key, const std::string& value) {
        metadata.emplace_back(key, value);
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& e : entries) n += e.pass ? 0 : 1;
        return n;
    }
};

/// Top-level document written by the CLI: version, config echo, reports,
/// summary counts and the lift-sign calibration record.
struct ReportDocument {
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckReport> reports;
    int calibrated_lift_sign = +1;

    bool all_pass() const {
        for (const auto& r : reports)
            if (!r.all_pass()) return false;
        return true;
    }
};

/// Deterministic JSON rendering (fixed key order, %.17g doubles).
std::string report_to_json_string(const ReportDocument& doc);

/// Fixed-width scientific formatting used across reports and CSV output.
std::string format_double(double v);

/// CSV with the documented column order:
/// u,v,x1,x2,x3,x4,x5,conf_res,mean_curv,ind_center,ind_radius,ind_circ_res,spin
struct SurfaceSampleRow {
    double u = 0, v = 0;
    double x[5] = {0, 0, 0, 0, 0};
    double conf_res = 0, mean_curv = 0, ind_center = 0, ind_radius = 0, ind_circ_res = 0;
    int spin = 0;
    bool masked = false;
};

std::string surface_csv_header();
std::string surface_csv_row(const SurfaceSampleRow& row);

}  // namespace twistor
